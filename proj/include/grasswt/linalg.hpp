#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grasswt/gf.hpp"

namespace grasswt {

// Dense matrix over a finite field. Entries are element ranks; all arithmetic
// is exact table lookups, no floating point anywhere.
struct FMatrix {
    const Field* f = nullptr;
    int rows = 0, cols = 0;
    std::vector<uint8_t> a;

    FMatrix() = default;
    FMatrix(const Field& F, int r, int c) : f(&F), rows(r), cols(c), a(size_t(r) * c, 0) {}

    uint8_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
    uint8_t at(int i, int j) const { return a[size_t(i) * cols + j]; }
    const uint8_t* row(int i) const { return a.data() + size_t(i) * cols; }
    uint8_t* row(int i) { return a.data() + size_t(i) * cols; }

    FieldElement elem(int i, int j) const { return {at(i, j), f}; }
    void set(int i, int j, FieldElement x);

    FMatrix transposed() const;
};

bool operator==(const FMatrix& A, const FMatrix& B);

// Stacks B below A (same field, same column count).
FMatrix vstack(const FMatrix& A, const FMatrix& B);

// Reduces M to reduced row echelon form in place. Returns the rank; if
// `pivots` is given it receives the pivot column of each nonzero row.
int rref_in_place(FMatrix& M, std::vector<int>* pivots = nullptr);

int rank_of(FMatrix M);

// Basis of the right null space {x : Mx = 0}, returned as RREF rows.
FMatrix kernel(const FMatrix& M);

// Solves x * A = b for a row vector x (size A.rows). Empty result when the
// system is inconsistent.
std::optional<std::vector<uint8_t>> solve_left(const FMatrix& A, const std::vector<uint8_t>& b);

// Subspace of F_q^n held in canonical form: the basis matrix is in RREF with
// zero rows stripped, so two subspaces are equal iff their bases are
// bytewise equal.
struct Subspace {
    FMatrix basis;

    static Subspace span_of(FMatrix gens);
    static Subspace zero(const Field& F, int ambient);
    static Subspace full(const Field& F, int ambient);

    int dim() const { return basis.rows; }
    int ambient() const { return basis.cols; }
    const Field& field() const { return *basis.f; }

    bool contains(const std::vector<uint8_t>& v) const;
    bool contains_all(const Subspace& other) const;
};

bool operator==(const Subspace& A, const Subspace& B);
bool operator!=(const Subspace& A, const Subspace& B);

Subspace sum(const Subspace& A, const Subspace& B);
Subspace intersect(const Subspace& A, const Subspace& B);

// Null space of the basis rows under the standard dot product.
Subspace perp(const Subspace& S);

// A complement C of A inside B (A <= B required): the rows of B's RREF basis
// whose pivot columns are not pivot columns of A. A + C = B, A meet C = 0.
Subspace complement_of_in(const Subspace& A, const Subspace& B);

// Every d-dimensional subspace of F_q^n, by direct RREF enumeration (pivot
// sets in lex order, free entries odometer). Desk-scale helper; the count is
// the Gaussian binomial, so keep n small.
std::vector<Subspace> all_subspaces(const Field& F, int n, int d);

// Number of k-dimensional subspaces of F_q^n, exact; throws Overflow when
// the count does not fit in 64 bits.
uint64_t gaussian_binomial(int n, int k, int q);

} // namespace grasswt
