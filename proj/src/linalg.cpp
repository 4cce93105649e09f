#include "grasswt/linalg.hpp"

#include <algorithm>

namespace grasswt {

void FMatrix::set(int i, int j, FieldElement x) {
    if (!f || !x.f || !f->same(*x.f)) fail(Errc::MixedFields, "matrix/element field mismatch");
    at(i, j) = x.v;
}

FMatrix FMatrix::transposed() const {
    FMatrix T(*f, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) T.at(j, i) = at(i, j);
    return T;
}

bool operator==(const FMatrix& A, const FMatrix& B) {
    if (!A.f || !B.f || !A.f->same(*B.f)) fail(Errc::MixedFields, "comparing matrices over different fields");
    return A.rows == B.rows && A.cols == B.cols && A.a == B.a;
}

FMatrix vstack(const FMatrix& A, const FMatrix& B) {
    if (!A.f->same(*B.f)) fail(Errc::MixedFields, "stacking matrices over different fields");
    if (A.cols != B.cols) fail(Errc::AmbientMismatch, "stacking matrices of different widths");
    FMatrix M(*A.f, A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), M.a.begin());
    std::copy(B.a.begin(), B.a.end(), M.a.begin() + A.a.size());
    return M;
}

int rref_in_place(FMatrix& M, std::vector<int>* pivots) {
    const Field& F = *M.f;
    if (pivots) pivots->clear();
    int r = 0;
    for (int col = 0; col < M.cols && r < M.rows; ++col) {
        int piv = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
        uint8_t s = F.invv(M.at(r, col));
        for (int j = col; j < M.cols; ++j) M.at(r, j) = F.mulv(M.at(r, j), s);
        for (int i = 0; i < M.rows; ++i) {
            if (i == r) continue;
            uint8_t c = M.at(i, col);
            if (c == 0) continue;
            for (int j = col; j < M.cols; ++j)
                M.at(i, j) = F.subv(M.at(i, j), F.mulv(c, M.at(r, j)));
        }
        if (pivots) pivots->push_back(col);
        ++r;
    }
    return r;
}

int rank_of(FMatrix M) { return rref_in_place(M); }

FMatrix kernel(const FMatrix& M) {
    const Field& F = *M.f;
    FMatrix R = M;
    std::vector<int> piv;
    int r = rref_in_place(R, &piv);
    std::vector<bool> is_pivot(M.cols, false);
    for (int c : piv) is_pivot[c] = true;

    FMatrix K(F, M.cols - r, M.cols);
    int out = 0;
    for (int j = 0; j < M.cols; ++j) {
        if (is_pivot[j]) continue;
        // x_j = 1, x_{piv[i]} = -R[i][j]
        K.at(out, j) = F.onev();
        for (int i = 0; i < r; ++i) K.at(out, piv[i]) = F.negv(R.at(i, j));
        ++out;
    }
    rref_in_place(K);
    return K;
}

std::optional<std::vector<uint8_t>> solve_left(const FMatrix& A, const std::vector<uint8_t>& b) {
    if (int(b.size()) != A.cols) fail(Errc::AmbientMismatch, "rhs length != matrix width");
    const Field& F = *A.f;
    // Augment A^T with b^T and reduce: columns of the augmented system are
    // the unknowns x_0..x_{rows-1}.
    FMatrix M(F, A.cols, A.rows + 1);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) M.at(j, i) = A.at(i, j);
    for (int j = 0; j < A.cols; ++j) M.at(j, A.rows) = b[j];
    std::vector<int> piv;
    rref_in_place(M, &piv);
    std::vector<uint8_t> x(A.rows, 0);
    for (size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == A.rows) return std::nullopt; // pivot in the rhs column
        x[piv[i]] = M.at(int(i), A.rows);
    }
    return x;
}

Subspace Subspace::span_of(FMatrix gens) {
    int r = rref_in_place(gens);
    FMatrix b(*gens.f, r, gens.cols);
    std::copy(gens.a.begin(), gens.a.begin() + size_t(r) * gens.cols, b.a.begin());
    return Subspace{std::move(b)};
}

Subspace Subspace::zero(const Field& F, int ambient) { return Subspace{FMatrix(F, 0, ambient)}; }

Subspace Subspace::full(const Field& F, int ambient) {
    FMatrix b(F, ambient, ambient);
    for (int i = 0; i < ambient; ++i) b.at(i, i) = F.onev();
    return Subspace{std::move(b)};
}

bool Subspace::contains(const std::vector<uint8_t>& v) const {
    if (int(v.size()) != ambient()) fail(Errc::AmbientMismatch, "vector length != ambient dim");
    const Field& F = field();
    std::vector<uint8_t> w = v;
    // Reduce against the RREF rows; w lands at zero iff it is in the span.
    for (int i = 0; i < basis.rows; ++i) {
        int p = -1;
        for (int j = 0; j < basis.cols; ++j)
            if (basis.at(i, j) != 0) {
                p = j;
                break;
            }
        uint8_t c = w[p];
        if (c == 0) continue;
        for (int j = p; j < basis.cols; ++j) w[j] = F.subv(w[j], F.mulv(c, basis.at(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](uint8_t x) { return x == 0; });
}

bool Subspace::contains_all(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i) {
        std::vector<uint8_t> v(other.basis.row(i), other.basis.row(i) + other.ambient());
        if (!contains(v)) return false;
    }
    return true;
}

bool operator==(const Subspace& A, const Subspace& B) { return A.basis == B.basis; }
bool operator!=(const Subspace& A, const Subspace& B) { return !(A == B); }

Subspace sum(const Subspace& A, const Subspace& B) {
    return Subspace::span_of(vstack(A.basis, B.basis));
}

Subspace perp(const Subspace& S) { return Subspace{kernel(S.basis)}; }

Subspace intersect(const Subspace& A, const Subspace& B) {
    if (A.ambient() != B.ambient()) fail(Errc::AmbientMismatch, "intersecting different ambients");
    return perp(sum(perp(A), perp(B)));
}

Subspace complement_of_in(const Subspace& A, const Subspace& B) {
    if (!B.contains_all(A)) fail(Errc::AmbientMismatch, "complement requires A <= B");
    auto pivot_of = [](const FMatrix& M, int i) {
        for (int j = 0; j < M.cols; ++j)
            if (M.at(i, j) != 0) return j;
        return -1;
    };
    std::vector<bool> in_a(B.ambient(), false);
    for (int i = 0; i < A.dim(); ++i) in_a[pivot_of(A.basis, i)] = true;
    FMatrix C(B.field(), B.dim() - A.dim(), B.ambient());
    int out = 0;
    for (int i = 0; i < B.dim(); ++i) {
        if (in_a[pivot_of(B.basis, i)]) continue;
        std::copy(B.basis.row(i), B.basis.row(i) + B.ambient(), C.row(out++));
    }
    return Subspace::span_of(std::move(C));
}

std::vector<Subspace> all_subspaces(const Field& F, int n, int d) {
    std::vector<Subspace> out;
    if (d < 0 || d > n) return out;
    if (d == 0) {
        out.push_back(Subspace::zero(F, n));
        return out;
    }
    std::vector<int> piv(d);
    for (int i = 0; i < d; ++i) piv[i] = i;
    while (true) {
        // free cells: row i, columns past piv[i] that are not pivots
        std::vector<std::pair<int, int>> cells;
        std::vector<bool> is_piv(n, false);
        for (int p : piv) is_piv[p] = true;
        for (int i = 0; i < d; ++i)
            for (int j = piv[i] + 1; j < n; ++j)
                if (!is_piv[j]) cells.push_back({i, j});

        FMatrix M(F, d, n);
        for (int i = 0; i < d; ++i) M.at(i, piv[i]) = F.onev();
        std::vector<uint8_t> vals(cells.size(), 0);
        while (true) {
            for (size_t c = 0; c < cells.size(); ++c) M.at(cells[c].first, cells[c].second) = vals[c];
            out.push_back(Subspace{M});
            size_t i = cells.size();
            while (i > 0 && vals[i - 1] == uint8_t(F.q() - 1)) vals[--i] = 0;
            if (i == 0) break;
            ++vals[i - 1];
        }

        int i = d - 1;
        while (i >= 0 && piv[i] == n - d + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

uint64_t gaussian_binomial(int n, int k, int q) {
    if (q < 2) fail(Errc::BadFormat, "q must be at least 2");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k); // symmetry keeps the intermediates below the result
    // row of the q-Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]
    std::vector<uint64_t> row(size_t(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            uint64_t shifted, total;
            uint64_t pw = 1;
            for (int t = 0; t < j; ++t)
                if (__builtin_mul_overflow(pw, uint64_t(q), &pw))
                    fail(Errc::Overflow, "Gaussian binomial exceeds 64 bits");
            if (__builtin_mul_overflow(row[j], pw, &shifted) ||
                __builtin_add_overflow(row[j - 1], shifted, &total))
                fail(Errc::Overflow, "Gaussian binomial exceeds 64 bits");
            row[j] = total;
        }
    }
    return row[k];
}

} // namespace grasswt
