#include "grasswt/decomp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace grasswt {

namespace {

void check_space(const ExtAmbient& A, const Subspace& E) {
    if (E.ambient() != A.coord_dim()) fail(Errc::AmbientMismatch, "subspace not in the stated wedge power");
    if (!E.field().same(*A.f)) fail(Errc::MixedFields, "subspace over a different field");
}

ExteriorVector wedge_rows(const Field& F, const FMatrix& M, int skip = -1) {
    ExteriorVector w = ExteriorVector::zero(F, 0, M.cols);
    bool started = false;
    for (int i = 0; i < M.rows; ++i) {
        if (i == skip) continue;
        ExteriorVector v = ExteriorVector::from_vector(F, {M.row(i), M.row(i) + M.cols});
        w = started ? wedge(w, v) : v;
        started = true;
    }
    return w;
}

bool decomposable_coords(const ExtAmbient& A, const std::vector<uint8_t>& coords) {
    ExteriorVector w = A.form(coords);
    if (A.l == 2 || (A.l == A.m - 2 && A.m > 2)) return rank2form(w) == 2;
    return is_decomposable(w);
}

// Walks the projective representatives of E (first nonzero coefficient = 1)
// in base-q odometer order, coefficient 0 least significant. Returns false if
// fn stops the walk.
template <typename Fn>
bool walk_projective(const ExtAmbient& A, const Subspace& E, Fn fn) {
    const Field& F = E.field();
    int r = E.dim(), n = E.ambient(), q = F.q();
    std::vector<uint8_t> c(r, 0);
    std::vector<uint8_t> v(n, 0);
    while (true) {
        size_t i = 0;
        while (i < size_t(r) && c[i] == uint8_t(q - 1)) c[i++] = 0;
        if (i == size_t(r)) return true;
        ++c[i];
        int first = r - 1;
        while (first >= 0 && c[first] == 0) --first;
        // representative iff the leading coefficient (highest index used) is 1
        if (c[first] != F.onev()) continue;
        std::fill(v.begin(), v.end(), 0);
        for (int j = 0; j < r; ++j) {
            if (c[j] == 0) continue;
            for (int t = 0; t < n; ++t) v[t] = F.addv(v[t], F.mulv(c[j], E.basis.at(j, t)));
        }
        if (!fn(v)) return false;
    }
}

uint64_t projective_count(int q, int r) {
    uint64_t num = 1;
    for (int i = 0; i < r; ++i) {
        if (num > UINT64_MAX / uint64_t(q)) return UINT64_MAX;
        num *= uint64_t(q);
    }
    return (num - 1) / uint64_t(q - 1);
}

} // namespace

const char* close_kind_name(CloseKind k) {
    switch (k) {
        case CloseKind::TypeI: return "type-1";
        case CloseKind::TypeII: return "type-2";
        case CloseKind::Ambiguous: return "ambiguous";
        case CloseKind::NotDecomposable: return "not-decomposable";
    }
    return "?";
}

int max_decomposable_dim(int l, int m) {
    if (l < 1 || l > m) fail(Errc::WrongDegree, "degree out of range");
    int mu = std::max(l, m - l) + 1;
    return int(std::min<uint64_t>(uint64_t(mu), binom(m, l)));
}

Subspace v_sub(const ExtAmbient& A, const Subspace& E) {
    check_space(A, E);
    Subspace acc = Subspace::full(*A.f, A.m);
    for (int i = 0; i < E.dim(); ++i) {
        ExteriorVector w = A.form({E.basis.row(i), E.basis.row(i) + E.ambient()});
        if (!is_decomposable(w)) fail(Errc::NotDecomposableBasis, "basis form " + std::to_string(i));
        acc = intersect(acc, annihilator(w));
    }
    return acc;
}

Subspace v_sup(const ExtAmbient& A, const Subspace& E) {
    check_space(A, E);
    Subspace acc = Subspace::zero(*A.f, A.m);
    for (int i = 0; i < E.dim(); ++i) {
        ExteriorVector w = A.form({E.basis.row(i), E.basis.row(i) + E.ambient()});
        if (!is_decomposable(w)) fail(Errc::NotDecomposableBasis, "basis form " + std::to_string(i));
        acc = sum(acc, annihilator(w));
    }
    return acc;
}

Subspace make_close_type1(const ExtAmbient& A, const FMatrix& f, const FMatrix& g) {
    const Field& F = *A.f;
    int l = A.l, r = g.rows;
    if (f.rows != l - 1) fail(Errc::WrongDegree, "type-1 needs l-1 f-vectors");
    if (r < 1) fail(Errc::DependentInput, "type-1 needs at least one g");
    if (r > A.m - l + 1) fail(Errc::RankOverflow, "type-1 dimension cap is m-l+1");
    if (f.cols != A.m || g.cols != A.m) fail(Errc::AmbientMismatch, "vectors not in F_q^m");
    if (rank_of(vstack(f, g)) != l - 1 + r) fail(Errc::DependentInput, "f,g not jointly independent");

    std::vector<ExteriorVector> forms;
    ExteriorVector head = wedge_rows(F, f);
    for (int i = 0; i < r; ++i) {
        ExteriorVector gi = ExteriorVector::from_vector(F, {g.row(i), g.row(i) + A.m});
        forms.push_back(l == 1 ? gi : wedge(head, gi));
    }
    return span_of_forms(forms);
}

Subspace make_close_type2(const ExtAmbient& A, const FMatrix& u, const FMatrix& g) {
    const Field& F = *A.f;
    int l = A.l, r = g.rows;
    if (r < 1) fail(Errc::DependentInput, "type-2 needs at least one g");
    if (r > l + 1) fail(Errc::RankOverflow, "type-2 dimension cap is l+1");
    if (u.rows != l - r + 1) fail(Errc::WrongDegree, "type-2 needs l-r+1 u-vectors");
    if (u.cols != A.m || g.cols != A.m) fail(Errc::AmbientMismatch, "vectors not in F_q^m");
    if (rank_of(vstack(u, g)) != l + 1) fail(Errc::DependentInput, "u,g not jointly independent");

    std::vector<ExteriorVector> forms;
    for (int i = 0; i < r; ++i) {
        FMatrix rows = vstack(u, g);
        forms.push_back(wedge_rows(F, rows, u.rows + i));
    }
    return span_of_forms(forms);
}

CloseWitness classify(const ExtAmbient& A, const Subspace& E, const EnumLimits& lim) {
    check_space(A, E);
    const Field& F = *A.f;
    int r = E.dim(), l = A.l;
    CloseWitness w;
    w.dim = r;
    if (r == 0) {
        w.kind = CloseKind::Ambiguous;
        w.first = FMatrix(F, 0, A.m);
        w.second = FMatrix(F, 0, A.m);
        return w;
    }
    if (projective_count(F.q(), r) > lim.element_budget)
        fail(Errc::EnumerationBudgetExceeded, "too many elements to walk");

    bool all_dec = walk_projective(A, E, [&](const std::vector<uint8_t>& v) {
        if (decomposable_coords(A, v)) return true;
        w.counterexample = v;
        return false;
    });
    if (!all_dec) {
        w.kind = CloseKind::NotDecomposable;
        return w;
    }

    auto respan_check = [&](const Subspace& back) {
        if (back != E) throw std::logic_error("close witness failed to re-span its subspace");
    };

    if (r == 1) {
        Decomposition d = decompose(A.form({E.basis.row(0), E.basis.row(0) + E.ambient()}));
        w.kind = CloseKind::Ambiguous;
        w.first = FMatrix(F, l - 1, A.m);
        std::copy(d.factors.a.begin(), d.factors.a.begin() + size_t(l - 1) * A.m, w.first.a.begin());
        w.second = FMatrix(F, 1, A.m);
        std::copy(d.factors.row(l - 1), d.factors.row(l - 1) + A.m, w.second.row(0));
        respan_check(make_close_type1(A, w.first, w.second));
        return w;
    }

    Subspace sub = v_sub(A, E), sup = v_sup(A, E);
    if (r <= 2 || sub.dim() == l - 1) {
        if (sub.dim() != l - 1 || sup.dim() != l + r - 1)
            throw std::logic_error("decomposable subspace violates the type-1 shape");
        w.kind = r <= 2 ? CloseKind::Ambiguous : CloseKind::TypeI;
        w.first = sub.basis;
        w.second = complement_of_in(sub, sup).basis;
        respan_check(make_close_type1(A, w.first, w.second));
        return w;
    }
    if (sub.dim() == l - r + 1) {
        if (sup.dim() != l + 1)
            throw std::logic_error("decomposable subspace violates the type-2 shape");
        w.kind = CloseKind::TypeII;
        w.first = sub.basis;
        w.second = complement_of_in(sub, sup).basis;
        respan_check(make_close_type2(A, w.first, w.second));
        return w;
    }
    throw std::logic_error("decomposable subspace matching neither close type");
}

uint64_t count_decomposable_in(const ExtAmbient& A, const Subspace& E, const EnumLimits& lim) {
    check_space(A, E);
    if (E.dim() == 0) return 0;
    if (projective_count(E.field().q(), E.dim()) > lim.element_budget)
        fail(Errc::EnumerationBudgetExceeded, "too many elements to walk");
    uint64_t reps = 0;
    walk_projective(A, E, [&](const std::vector<uint8_t>& v) {
        reps += decomposable_coords(A, v);
        return true;
    });
    return reps * uint64_t(E.field().q() - 1);
}

Subspace build_extremal_subspace(const Field& F, int m) {
    if (m <= 4) fail(Errc::AmbientTooSmall, "extremal construction needs m > 4");
    std::vector<ExteriorVector> forms;
    for (int i = 2; i <= m; ++i) forms.push_back(ExteriorVector::basis_vector(F, m, {1, i}));
    forms.push_back(ExteriorVector::basis_vector(F, m, {2, 3}));
    return span_of_forms(forms);
}

std::vector<Subspace> enumerate_close_subspaces(const ExtAmbient& A, int r, CloseKind kind) {
    const Field& F = *A.f;
    int l = A.l;
    if (kind != CloseKind::TypeI && kind != CloseKind::TypeII)
        fail(Errc::WrongDegree, "enumerate a concrete close type");
    if ((kind == CloseKind::TypeI && r < 2) || (kind == CloseKind::TypeII && r < 3))
        fail(Errc::WrongDegree, "flag pairs do not determine subspaces this small");

    int sub_dim = kind == CloseKind::TypeI ? l - 1 : l - r + 1;
    int sup_dim = kind == CloseKind::TypeI ? l + r - 1 : l + 1;
    std::vector<Subspace> out;
    if (sub_dim < 0 || sup_dim > A.m) return out;

    std::set<std::vector<uint8_t>> seen;
    for (const Subspace& lo : all_subspaces(F, A.m, sub_dim)) {
        for (const Subspace& hi : all_subspaces(F, A.m, sup_dim)) {
            if (!hi.contains_all(lo)) continue;
            FMatrix g = complement_of_in(lo, hi).basis;
            Subspace E = kind == CloseKind::TypeI ? make_close_type1(A, lo.basis, g)
                                                  : make_close_type2(A, lo.basis, g);
            if (seen.insert(E.basis.a).second) out.push_back(E);
        }
    }
    return out;
}

} // namespace grasswt
