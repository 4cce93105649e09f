#pragma once

#include <cstdint>
#include <vector>

#include "grasswt/linalg.hpp"

namespace grasswt {

uint64_t binom(int n, int k);

// Basis index bookkeeping for wedge powers of F_q^m. The basis of the l-th
// wedge power is indexed by strictly increasing 1-based tuples
// alpha_1 < ... < alpha_l, listed lexicographically; this order fixes the
// coordinate layout everywhere downstream (subspaces, generator matrices,
// point sets). Tuples are packed as bitmasks: bit i-1 set means index i is
// present.
struct IndexSet {
    int m = 0, l = 0;
    std::vector<uint32_t> masks;      // lex order of tuples
    std::vector<int32_t> rank_by_mask; // size 2^m, -1 where popcount != l

    IndexSet(int m, int l);
    int rank(uint32_t mask) const { return rank_by_mask[mask]; }
    size_t size() const { return masks.size(); }

    static uint32_t mask_of(const std::vector<int>& tuple); // entries 1-based
    static std::vector<int> tuple_of(uint32_t mask);
};

// Element of the l-th wedge power of F_q^m, dense coordinates in IndexSet
// order.
struct ExteriorVector {
    int degree = 0, m = 0;
    const Field* f = nullptr;
    std::vector<uint8_t> coords;

    static ExteriorVector zero(const Field& F, int degree, int m);
    // e_{tuple}, tuple strictly increasing 1-based
    static ExteriorVector basis_vector(const Field& F, int m, const std::vector<int>& tuple);
    // degree-1 vector from coordinates in F_q^m
    static ExteriorVector from_vector(const Field& F, const std::vector<uint8_t>& v);

    bool is_zero() const;
    FieldElement coord(const std::vector<int>& tuple) const;
    void set_coord(const std::vector<int>& tuple, FieldElement c);
};

ExteriorVector operator+(const ExteriorVector& a, const ExteriorVector& b);
ExteriorVector operator-(const ExteriorVector& a, const ExteriorVector& b);
ExteriorVector scale(FieldElement c, const ExteriorVector& a);
bool operator==(const ExteriorVector& a, const ExteriorVector& b);
bool operator!=(const ExteriorVector& a, const ExteriorVector& b);

// Wedge product; degrees must satisfy deg a + deg b <= m.
ExteriorVector wedge(const ExteriorVector& a, const ExteriorVector& b);

// Annihilator V_w = {v in V : v ^ w = 0}, returned as a subspace of F_q^m.
// w = 0 gives all of V; for degree m every w has annihilator V.
Subspace annihilator(const ExteriorVector& w);

// w is a wedge of `degree` independent vectors. Nonzero w required.
bool is_decomposable(const ExteriorVector& w);

struct Decomposition {
    FieldElement c;
    FMatrix factors; // degree x m, rows multiply out to w/c
};

// Writes w as c * v_1 ^ ... ^ v_l with the rows of `factors` the RREF basis
// of the annihilator. Throws NotDecomposable when w is not decomposable.
Decomposition decompose(const ExteriorVector& w);

// Basis-wise Hodge star: e_alpha -> (-1)^{sum(alpha) + l(l+1)/2} e_{alpha^c}.
ExteriorVector hodge_star(const ExteriorVector& w);

// Alternating matrix (A = -A^T with zero diagonal, which matters in
// characteristic 2).
struct SkewMatrix {
    FMatrix a;
    int size() const { return a.rows; }
    bool valid() const;
};

// Rank of an alternating matrix; always even, which is rechecked on every
// call.
int skew_rank(const SkewMatrix& s);

// sigma: degree-2 forms to alternating matrices, e_r ^ e_s -> E_rs - E_sr.
SkewMatrix sigma(const ExteriorVector& w);

// pi: degree-(m-2) forms to alternating matrices; entry (i,j) is the scalar
// of e_i ^ e_j ^ w under e_1 ^ ... ^ e_m -> 1. Needs m > 2.
SkewMatrix pi(const ExteriorVector& w);

// Rank of the alternating matrix attached to w (sigma for degree 2, pi for
// degree m-2). Decomposable nonzero forms are exactly the rank-2 ones.
int rank2form(const ExteriorVector& w);

// Coordinate row of w in its wedge-power ambient (used to treat collections
// of forms as a Subspace), and the inverse.
std::vector<uint8_t> form_coords(const ExteriorVector& w);
ExteriorVector form_from_coords(const Field& F, int degree, int m, const std::vector<uint8_t>& coords);
Subspace span_of_forms(const std::vector<ExteriorVector>& forms);

} // namespace grasswt
