#pragma once

#include <cstdint>
#include <vector>

#include "grasswt/gf.hpp"

namespace grasswt {

// Exhaustive searches over the r-dimensional subspaces of F_q^k. Subspaces
// are enumerated as RREF matrices: pivot-column sets in lex order, free
// entries by odometer with deeper rows changing fastest, so the order is
// fixed and witnesses are "first in enumeration order". Rows travel as
// packed base-q digit strings of field-element ranks, column 0 most
// significant; this matches the codeword-table indexing.
//
// `workers` splits pivot sets round-robin across threads; the merge is
// deterministic and reproduces the single-thread answer bit for bit.

struct MinOrResult {
    int best = -1;                // smallest popcount of OR-ed row masks
    std::vector<uint64_t> rows;   // packed rows of the first minimizing subspace
    uint64_t visited = 0;         // complete subspaces evaluated (prunes excluded)
};

// Minimizes popcount(mask[row_1] | ... | mask[row_r]) over subspaces. The
// mask table holds q^k entries of `words` 64-bit words; `one_rank` is the
// rank of the field one (pivot entries). Prunes on the monotone prefix OR.
MinOrResult min_or_search(const uint64_t* masks, int words, int k, int q, int one_rank, int r,
                          int workers);

struct MaxSumResult {
    uint64_t best = 0;            // largest sum of table values over a subspace
    std::vector<uint64_t> rows;
    uint64_t visited = 0;         // complete subspaces evaluated (prunes excluded)
};

// Maximizes sum(table[v] for v in subspace) over subspaces, the zero element
// included (keep table[0] = 0 to count nonzero hits only). Prunes with the
// upper bound current + max_entry * (elements not yet fixed).
MaxSumResult max_sum_search(const std::vector<uint32_t>& table, const Field& F, int k, int r,
                            int workers);

} // namespace grasswt
