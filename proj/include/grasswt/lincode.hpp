#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "grasswt/linalg.hpp"

namespace grasswt {

struct SearchLimits {
    uint64_t subspace_budget = 200'000'000; // max subspaces an exhaustive search may visit
    uint64_t codeword_budget = 10'000'000;  // max codewords a table may hold
    int workers = 1;
};

// Linear [n, k] code over F_q, held as a full-rank generator matrix.
struct LinearCode {
    FMatrix gen;

    static LinearCode from_generator(FMatrix G);
    int n() const { return gen.cols; }
    int k() const { return gen.rows; }
    const Field& field() const { return *gen.f; }
    bool nondegenerate() const; // no identically zero position

    // codeword of a length-k message, as field-element ranks
    std::vector<uint8_t> encode(const std::vector<uint8_t>& message) const;
};

// All q^k codewords as support bitmasks plus Hamming weights. Indexing is by
// packed message: base-q digit strings of element ranks, the coefficient of
// generator row 0 most significant.
struct CodewordTable {
    int k = 0, n = 0, q = 0, words = 0;
    std::vector<uint64_t> masks;
    std::vector<uint16_t> weights;

    CodewordTable(const LinearCode& C, uint64_t codeword_budget = 10'000'000);
    const uint64_t* mask(uint64_t idx) const { return masks.data() + idx * uint64_t(words); }
    int weight(uint64_t idx) const { return weights[idx]; }
    uint64_t size() const { return weights.size(); }
};

// weight -> number of codewords (the zero word included)
std::map<int, uint64_t> weight_distribution(const LinearCode& C, const SearchLimits& lim = {});

int min_distance(const LinearCode& C, const SearchLimits& lim = {});

// Smallest weight strictly above the minimum; equals the minimum when the
// code has a single nonzero weight.
int second_weight(const LinearCode& C, const SearchLimits& lim = {});

// Support size of the subcode spanned by the given messages (rows must be
// independent).
int subcode_norm(const LinearCode& C, const FMatrix& messages);

struct WeightWitness {
    int r = 0;
    int norm = 0;
    FMatrix messages;     // r x k RREF basis of a subcode attaining the norm
    uint64_t visited = 0; // subspaces the search actually evaluated
};

enum class SearchSide {
    Auto,    // primal for r <= k - r, section otherwise
    Primal,  // minimize the support union over r-dimensional subcodes
    Section, // n minus the most code positions on a codimension-r subspace
};

// r-th generalized Hamming weight by exhaustive search. The witness is the
// first attaining subcode in enumeration order of the chosen side.
WeightWitness higher_weight(const LinearCode& C, int r, const SearchLimits& lim = {},
                            SearchSide side = SearchSide::Auto);

// d_1 .. d_k
std::vector<WeightWitness> weight_hierarchy(const LinearCode& C, const SearchLimits& lim = {},
                                            SearchSide side = SearchSide::Auto);

// Largest number of marked messages in an r-dimensional subspace of F_q^k,
// over the table indexed by packed message (entry 0 is ignored). Returns the
// count and the first maximizing subspace.
struct MarkedWitness {
    uint64_t count = 0;
    FMatrix messages;
    uint64_t visited = 0;
};
MarkedWitness max_marked_in_subspace(const Field& F, int k, const std::vector<uint8_t>& marked,
                                     int r, const SearchLimits& lim = {});

// ceil((d*delta + e*(q^r - 1 - delta)) / (q^r - q^{r-1})), exact integer
// arithmetic; delta must lie in [0, q^r - 1].
uint64_t generalized_bound(uint64_t d, uint64_t e, uint64_t delta, int q, int r);

// sum over j < r of ceil(d / q^j)
uint64_t griesmer_wei_bound(uint64_t d, int q, int r);

// Text format: a "n k q" header line, then k generator rows of n entries.
// Prime-field entries are plain residues; extension-field entries are
// coefficient lists like [c0,c1] for c0 + c1*x (bare integers there are
// prime-subfield constants).
FieldElement parse_field_entry(const Field& F, std::istream& in);
LinearCode read_generator(std::istream& in);
void write_generator(std::ostream& out, const LinearCode& C);

} // namespace grasswt
