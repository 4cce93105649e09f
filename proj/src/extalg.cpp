#include "grasswt/extalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace grasswt {

uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * uint64_t(n - k + i) / uint64_t(i);
    return r;
}

IndexSet::IndexSet(int m_, int l_) : m(m_), l(l_) {
    if (l < 0 || l > m) fail(Errc::WrongDegree, "index set degree out of range");
    rank_by_mask.assign(size_t(1) << m, -1);
    // lex enumeration of increasing tuples
    std::vector<int> t(l);
    for (int i = 0; i < l; ++i) t[i] = i + 1;
    while (true) {
        uint32_t mask = mask_of(t);
        rank_by_mask[mask] = int32_t(masks.size());
        masks.push_back(mask);
        if (l == 0) break;
        int i = l - 1;
        while (i >= 0 && t[i] == m - (l - 1 - i)) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < l; ++j) t[j] = t[j - 1] + 1;
    }
}

uint32_t IndexSet::mask_of(const std::vector<int>& tuple) {
    uint32_t mask = 0;
    int prev = 0;
    for (int x : tuple) {
        if (x <= prev) fail(Errc::WrongDegree, "tuple not strictly increasing");
        mask |= uint32_t(1) << (x - 1);
        prev = x;
    }
    return mask;
}

std::vector<int> IndexSet::tuple_of(uint32_t mask) {
    std::vector<int> t;
    for (int i = 0; mask >> i; ++i)
        if (mask >> i & 1) t.push_back(i + 1);
    return t;
}

namespace {

void check_same_space(const ExteriorVector& a, const ExteriorVector& b) {
    if (!a.f || !b.f || !a.f->same(*b.f)) fail(Errc::MixedFields, "forms over different fields");
    if (a.m != b.m) fail(Errc::AmbientMismatch, "forms with different ambient dimension");
    if (a.degree != b.degree) fail(Errc::WrongDegree, "forms of different degree");
}

// Parity of the number of pairs (i in a, j in b) with j < i; the sign of
// merging e_a ^ e_b into sorted order.
int merge_sign(uint32_t a, uint32_t b) {
    int inv = 0;
    while (a) {
        uint32_t low = a & (~a + 1); // lowest set bit of a
        inv += std::popcount(b & (low - 1));
        a ^= low;
    }
    return inv & 1;
}

} // namespace

ExteriorVector ExteriorVector::zero(const Field& F, int degree, int m) {
    if (degree < 0 || degree > m) fail(Errc::WrongDegree, "degree out of range");
    ExteriorVector w;
    w.degree = degree;
    w.m = m;
    w.f = &F;
    w.coords.assign(binom(m, degree), 0);
    return w;
}

ExteriorVector ExteriorVector::basis_vector(const Field& F, int m, const std::vector<int>& tuple) {
    ExteriorVector w = zero(F, int(tuple.size()), m);
    w.set_coord(tuple, F.one());
    return w;
}

ExteriorVector ExteriorVector::from_vector(const Field& F, const std::vector<uint8_t>& v) {
    ExteriorVector w = zero(F, 1, int(v.size()));
    w.coords = v;
    return w;
}

bool ExteriorVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](uint8_t c) { return c == 0; });
}

FieldElement ExteriorVector::coord(const std::vector<int>& tuple) const {
    IndexSet ix(m, degree);
    return {coords[ix.rank(IndexSet::mask_of(tuple))], f};
}

void ExteriorVector::set_coord(const std::vector<int>& tuple, FieldElement c) {
    if (!f->same(*c.f)) fail(Errc::MixedFields, "coordinate from different field");
    IndexSet ix(m, degree);
    int r = ix.rank(IndexSet::mask_of(tuple));
    if (r < 0) fail(Errc::WrongDegree, "tuple length != degree");
    coords[r] = c.v;
}

ExteriorVector operator+(const ExteriorVector& a, const ExteriorVector& b) {
    check_same_space(a, b);
    ExteriorVector r = a;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = a.f->addv(a.coords[i], b.coords[i]);
    return r;
}

ExteriorVector operator-(const ExteriorVector& a, const ExteriorVector& b) {
    check_same_space(a, b);
    ExteriorVector r = a;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = a.f->subv(a.coords[i], b.coords[i]);
    return r;
}

ExteriorVector scale(FieldElement c, const ExteriorVector& a) {
    if (!a.f->same(*c.f)) fail(Errc::MixedFields, "scalar from different field");
    ExteriorVector r = a;
    for (auto& x : r.coords) x = a.f->mulv(c.v, x);
    return r;
}

bool operator==(const ExteriorVector& a, const ExteriorVector& b) {
    check_same_space(a, b);
    return a.coords == b.coords;
}
bool operator!=(const ExteriorVector& a, const ExteriorVector& b) { return !(a == b); }

ExteriorVector wedge(const ExteriorVector& a, const ExteriorVector& b) {
    if (!a.f->same(*b.f)) fail(Errc::MixedFields, "forms over different fields");
    if (a.m != b.m) fail(Errc::AmbientMismatch, "forms with different ambient dimension");
    if (a.degree + b.degree > a.m) fail(Errc::DegreeOverflow, "wedge degree exceeds ambient");
    const Field& F = *a.f;
    IndexSet ia(a.m, a.degree), ib(b.m, b.degree), ir(a.m, a.degree + b.degree);
    ExteriorVector r = ExteriorVector::zero(F, a.degree + b.degree, a.m);
    for (size_t i = 0; i < ia.size(); ++i) {
        if (a.coords[i] == 0) continue;
        for (size_t j = 0; j < ib.size(); ++j) {
            if (b.coords[j] == 0) continue;
            uint32_t ma = ia.masks[i], mb = ib.masks[j];
            if (ma & mb) continue;
            uint8_t term = F.mulv(a.coords[i], b.coords[j]);
            if (merge_sign(ma, mb)) term = F.negv(term);
            int t = ir.rank(ma | mb);
            r.coords[t] = F.addv(r.coords[t], term);
        }
    }
    return r;
}

Subspace annihilator(const ExteriorVector& w) {
    const Field& F = *w.f;
    if (w.degree == w.m) return Subspace::full(F, w.m); // v ^ w lands in degree m+1 = 0
    IndexSet iw(w.m, w.degree), it(w.m, w.degree + 1);
    FMatrix M(F, int(it.size()), w.m);
    for (size_t r = 0; r < iw.size(); ++r) {
        if (w.coords[r] == 0) continue;
        uint32_t alpha = iw.masks[r];
        for (int i = 1; i <= w.m; ++i) {
            uint32_t bi = uint32_t(1) << (i - 1);
            if (alpha & bi) continue;
            uint8_t c = w.coords[r];
            if (merge_sign(bi, alpha)) c = F.negv(c);
            M.at(it.rank(alpha | bi), i - 1) = F.addv(M.at(it.rank(alpha | bi), i - 1), c);
        }
    }
    return Subspace{kernel(M)};
}

bool is_decomposable(const ExteriorVector& w) {
    if (w.is_zero()) fail(Errc::ZeroVector, "decomposability of the zero form");
    if (w.degree == w.m) return true; // one-dimensional top power
    return annihilator(w).dim() == w.degree;
}

Decomposition decompose(const ExteriorVector& w) {
    if (w.is_zero()) fail(Errc::ZeroVector, "decomposing the zero form");
    Subspace ann = annihilator(w);
    if (w.degree != w.m && ann.dim() != w.degree)
        fail(Errc::NotDecomposable, "annihilator dimension " + std::to_string(ann.dim()));
    FMatrix factors = w.degree == w.m ? Subspace::full(*w.f, w.m).basis : ann.basis;

    ExteriorVector prod = ExteriorVector::from_vector(*w.f, {factors.row(0), factors.row(0) + w.m});
    for (int i = 1; i < w.degree; ++i)
        prod = wedge(prod, ExteriorVector::from_vector(*w.f, {factors.row(i), factors.row(i) + w.m}));

    size_t t = 0;
    while (t < prod.coords.size() && prod.coords[t] == 0) ++t;
    FieldElement c = FieldElement{w.coords[t], w.f} / FieldElement{prod.coords[t], w.f};
    if (scale(c, prod) != w) fail(Errc::NotDecomposable, "rewedge mismatch");
    return {c, std::move(factors)};
}

ExteriorVector hodge_star(const ExteriorVector& w) {
    const Field& F = *w.f;
    IndexSet iw(w.m, w.degree), ic(w.m, w.m - w.degree);
    ExteriorVector r = ExteriorVector::zero(F, w.m - w.degree, w.m);
    uint32_t all = (uint32_t(1) << w.m) - 1;
    for (size_t i = 0; i < iw.size(); ++i) {
        if (w.coords[i] == 0) continue;
        uint32_t alpha = iw.masks[i];
        int s = w.degree * (w.degree + 1) / 2;
        for (auto x : IndexSet::tuple_of(alpha)) s += x;
        uint8_t c = w.coords[i];
        if (s & 1) c = F.negv(c);
        r.coords[ic.rank(all ^ alpha)] = c;
    }
    return r;
}

bool SkewMatrix::valid() const {
    const Field& F = *a.f;
    if (a.rows != a.cols) return false;
    for (int i = 0; i < a.rows; ++i) {
        if (a.at(i, i) != 0) return false;
        for (int j = 0; j < a.cols; ++j)
            if (a.at(i, j) != F.negv(a.at(j, i))) return false;
    }
    return true;
}

int skew_rank(const SkewMatrix& s) {
    int r = rank_of(s.a);
    if (r % 2 != 0) throw std::logic_error("alternating matrix with odd rank");
    return r;
}

SkewMatrix sigma(const ExteriorVector& w) {
    if (w.degree != 2) fail(Errc::WrongDegree, "sigma needs a degree-2 form");
    const Field& F = *w.f;
    IndexSet iw(w.m, 2);
    FMatrix A(F, w.m, w.m);
    for (size_t i = 0; i < iw.size(); ++i) {
        if (w.coords[i] == 0) continue;
        auto t = IndexSet::tuple_of(iw.masks[i]);
        A.at(t[0] - 1, t[1] - 1) = w.coords[i];
        A.at(t[1] - 1, t[0] - 1) = F.negv(w.coords[i]);
    }
    return {std::move(A)};
}

SkewMatrix pi(const ExteriorVector& w) {
    if (w.m <= 2) fail(Errc::AmbientTooSmall, "pi needs m > 2");
    if (w.degree != w.m - 2) fail(Errc::WrongDegree, "pi needs a degree-(m-2) form");
    const Field& F = *w.f;
    FMatrix A(F, w.m, w.m);
    for (int i = 1; i <= w.m; ++i)
        for (int j = i + 1; j <= w.m; ++j) {
            ExteriorVector eij = ExteriorVector::basis_vector(F, w.m, {i, j});
            ExteriorVector top = wedge(eij, w); // degree m: single coordinate
            A.at(i - 1, j - 1) = top.coords[0];
            A.at(j - 1, i - 1) = F.negv(top.coords[0]);
        }
    return {std::move(A)};
}

int rank2form(const ExteriorVector& w) {
    if (w.degree == 2) return skew_rank(sigma(w));
    if (w.degree == w.m - 2) return skew_rank(pi(w));
    fail(Errc::WrongDegree, "rank is defined for degree 2 and m-2");
}

std::vector<uint8_t> form_coords(const ExteriorVector& w) { return w.coords; }

ExteriorVector form_from_coords(const Field& F, int degree, int m,
                                const std::vector<uint8_t>& coords) {
    ExteriorVector w = ExteriorVector::zero(F, degree, m);
    if (coords.size() != w.coords.size()) fail(Errc::AmbientMismatch, "coordinate count mismatch");
    w.coords = coords;
    return w;
}

Subspace span_of_forms(const std::vector<ExteriorVector>& forms) {
    if (forms.empty()) fail(Errc::AmbientMismatch, "empty form list");
    const ExteriorVector& w0 = forms.front();
    FMatrix M(*w0.f, int(forms.size()), int(w0.coords.size()));
    for (size_t i = 0; i < forms.size(); ++i) {
        check_same_space(forms[i], w0);
        std::copy(forms[i].coords.begin(), forms[i].coords.end(), M.row(int(i)));
    }
    return Subspace::span_of(std::move(M));
}

} // namespace grasswt
