#pragma once

#include "grasswt/extalg.hpp"

namespace grasswt {

// Ambient wedge power: degree-l forms on F_q^m. Subspaces of forms live in
// coordinates of length binom(m, l).
struct ExtAmbient {
    const Field* f = nullptr;
    int l = 0, m = 0;
    int coord_dim() const { return int(binom(m, l)); }
    ExteriorVector form(const std::vector<uint8_t>& coords) const {
        return form_from_coords(*f, l, m, coords);
    }
};

// Largest dimension of a subspace consisting entirely of decomposable
// elements: max{l, m-l} + 1, capped by the ambient coordinate dimension
// (which only bites at l = m).
int max_decomposable_dim(int l, int m);

// Intersection of the basis annihilators. Every basis form must be
// decomposable.
Subspace v_sub(const ExtAmbient& A, const Subspace& E);

// Sum of the basis annihilators.
Subspace v_sup(const ExtAmbient& A, const Subspace& E);

// span{f_1 ^ ... ^ f_{l-1} ^ g_i : i = 1..r}; rows of f and g must be
// jointly independent and r <= m - l + 1.
Subspace make_close_type1(const ExtAmbient& A, const FMatrix& f, const FMatrix& g);

// span of the r wedges u_1 ^ ... ^ u_{l-r+1} ^ g_1 ^ ...g_i omitted... ^ g_r;
// rows jointly independent and r <= l + 1.
Subspace make_close_type2(const ExtAmbient& A, const FMatrix& u, const FMatrix& g);

enum class CloseKind { TypeI, TypeII, Ambiguous, NotDecomposable };

const char* close_kind_name(CloseKind k);

struct CloseWitness {
    CloseKind kind = CloseKind::NotDecomposable;
    int dim = 0;
    // TypeI / Ambiguous: rows of `first` are the f_i, rows of `second` the
    // g_i. TypeII: rows of `first` are the u_i, rows of `second` the g_i.
    FMatrix first, second;
    // NotDecomposable: coordinates of the first non-decomposable element in
    // enumeration order.
    std::vector<uint8_t> counterexample;

    // Dimensions 0..2 satisfy both shapes; they are reported Ambiguous and
    // read as TypeI here.
    CloseKind label() const { return kind == CloseKind::Ambiguous ? CloseKind::TypeI : kind; }
};

struct EnumLimits {
    uint64_t element_budget = 10'000'000;
};

// Decides whether every nonzero element of E is decomposable and, if so,
// reconstructs the structure: dim <= 2 is Ambiguous, otherwise the
// annihilator-intersection dimension separates TypeI (l-1) from TypeII
// (l-r+1). Witnesses are verified by re-spanning before they are returned.
CloseWitness classify(const ExtAmbient& A, const Subspace& E, const EnumLimits& lim = {});

// Number of nonzero decomposable elements of E, by full enumeration (the
// degree-2 and degree-(m-2) cases go through the alternating-matrix rank).
uint64_t count_decomposable_in(const ExtAmbient& A, const Subspace& E, const EnumLimits& lim = {});

// span{e_1^e_2, ..., e_1^e_m} + F*(e_2^e_3): the (mu+1)-dimensional subspace
// of degree-2 forms with extremal decomposable count. Requires m > 4.
Subspace build_extremal_subspace(const Field& F, int m);

// Every close subspace of dimension r of the given type, enumerated through
// (V_E, V^E) flag pairs. r >= 2 for TypeI, r >= 3 for TypeII (below that the
// pairs do not pin the subspace down). Desk-scale helper.
std::vector<Subspace> enumerate_close_subspaces(const ExtAmbient& A, int r, CloseKind kind);

} // namespace grasswt
