#include "grasswt/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace grasswt {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Errc::DegreeZero: return "DegreeZero";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::MixedFields: return "MixedFields";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::BadCoefficients: return "BadCoefficients";
        case Errc::AmbientMismatch: return "AmbientMismatch";
        case Errc::DegreeOverflow: return "DegreeOverflow";
        case Errc::WrongDegree: return "WrongDegree";
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::NotDecomposable: return "NotDecomposable";
        case Errc::AmbientTooSmall: return "AmbientTooSmall";
        case Errc::NotDecomposableBasis: return "NotDecomposableBasis";
        case Errc::DependentInput: return "DependentInput";
        case Errc::RankOverflow: return "RankOverflow";
        case Errc::DependentBasis: return "DependentBasis";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::InvalidDelta: return "InvalidDelta";
        case Errc::NotInCode: return "NotInCode";
        case Errc::BadFormat: return "BadFormat";
        case Errc::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
        case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case Errc::Overflow: return "Overflow";
    }
    return "Error";
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, constant term first, no
// trailing-zero guarantee; deg() trims on the fly.
int poly_deg(const std::vector<int>& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// Remainder of a mod b over F_p; b monic.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = poly_deg(b);
    for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
        int c = a[da]; // leading coefficient to cancel (b is monic)
        for (int i = 0; i <= db; ++i) {
            int& t = a[da - db + i];
            t = (t - c * b[i]) % p;
            if (t < 0) t += p;
        }
    }
    return a;
}

std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), mod, p);
}

// Advances the coefficient list (c0..c_{d-1}) through F_p^d in lexicographic
// order, least significant position last. Returns false after the last tuple.
bool next_tuple(std::vector<int>& c, int p) {
    for (int i = int(c.size()) - 1; i >= 0; --i) {
        if (++c[i] < p) return true;
        c[i] = 0;
    }
    return false;
}

// True when the monic polynomial f (degree e) has no monic divisor of degree
// 1..e/2.
bool is_irreducible(const std::vector<int>& f, int e, int p) {
    for (int d = 1; 2 * d <= e; ++d) {
        std::vector<int> g(d + 1, 0);
        g[d] = 1;
        std::vector<int> low(d, 0); // the d free coefficients of g
        do {
            for (int i = 0; i < d; ++i) g[i] = low[i];
            if (poly_deg(poly_mod(f, g, p)) < 0) return false;
        } while (next_tuple(low, p));
    }
    return true;
}

} // namespace

Field::Field(int p, int e, int max_q) : p_(p), e_(e) {
    if (!is_prime(p)) fail(Errc::NonPrimeCharacteristic, "p = " + std::to_string(p));
    if (e < 1) fail(Errc::DegreeZero, "e = " + std::to_string(e));
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > max_q)
            fail(Errc::FieldTooLarge,
                 "q = p^e exceeds cap " + std::to_string(max_q));
    }
    q_ = int(q);

    // Canonical modulus: first irreducible in lexicographic order on the
    // coefficient list (c0, ..., c_{e-1}, 1).
    modulus_.assign(e + 1, 0);
    modulus_[e] = 1;
    if (e > 1) {
        std::vector<int> low(e, 0);
        bool found = false;
        do {
            for (int i = 0; i < e; ++i) modulus_[i] = low[i];
            if (is_irreducible(modulus_, e, p)) {
                found = true;
                break;
            }
        } while (next_tuple(low, p));
        if (!found) fail(Errc::DegreeZero, "no irreducible found"); // unreachable
    } else {
        modulus_ = {0, 1}; // F_p = F_p[x]/(x)
    }

    // rank <-> coefficient list: rank = sum c_i * p^{e-1-i}, so ranks sort
    // exactly like the lists.
    auto coeffs_of = [&](int rank) {
        std::vector<int> c(e_);
        for (int i = e_ - 1; i >= 0; --i) {
            c[i] = rank % p_;
            rank /= p_;
        }
        return c;
    };
    auto rank_of = [&](const std::vector<int>& c) {
        int r = 0;
        for (int i = 0; i < e_; ++i) r = r * p_ + (i < int(c.size()) ? c[i] : 0);
        return r;
    };

    std::vector<int> one_c(e_, 0);
    one_c[0] = 1;
    one_ = uint8_t(rank_of(one_c));

    add_.assign(size_t(q_) * q_, 0);
    mul_.assign(size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        auto ca = coeffs_of(a);
        std::vector<int> na(e_);
        for (int i = 0; i < e_; ++i) na[i] = (p_ - ca[i]) % p_;
        neg_[a] = uint8_t(rank_of(na));
        for (int b = 0; b < q_; ++b) {
            auto cb = coeffs_of(b);
            std::vector<int> s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[size_t(a) * q_ + b] = uint8_t(rank_of(s));
            auto m = poly_mulmod(ca, cb, modulus_, p_);
            m.resize(e_);
            mul_[size_t(a) * q_ + b] = uint8_t(rank_of(m));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[size_t(a) * q_ + b] == one_) {
                inv_[a] = uint8_t(b);
                break;
            }
}

FieldElement Field::element(int rank) const {
    if (rank < 0 || rank >= q_) fail(Errc::BadCoefficients, "rank out of range");
    return {uint8_t(rank), this};
}

FieldElement Field::from_coeffs(const std::vector<int>& c) const {
    if (int(c.size()) > e_) {
        for (size_t i = e_; i < c.size(); ++i)
            if (c[i] % p_ != 0) fail(Errc::BadCoefficients, "coefficient list too long");
    }
    int r = 0;
    for (int i = 0; i < e_; ++i) {
        int ci = i < int(c.size()) ? c[i] % p_ : 0;
        if (ci < 0) ci += p_;
        r = r * p_ + ci;
    }
    return {uint8_t(r), this};
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (int r = 0; r < q_; ++r) out.push_back({uint8_t(r), this});
    return out;
}

std::vector<int> FieldElement::coeffs() const {
    if (!f) fail(Errc::MixedFields, "element has no field");
    std::vector<int> c(f->e());
    int rank = v;
    for (int i = f->e() - 1; i >= 0; --i) {
        c[i] = rank % f->p();
        rank /= f->p();
    }
    return c;
}

const Field& cached_field(int p, int e) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> pool;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = pool[{p, e}];
    if (!slot) slot = std::make_unique<Field>(p, e);
    return *slot;
}

const Field& common_field(FieldElement a, FieldElement b) {
    if (!a.f || !b.f) fail(Errc::MixedFields, "element has no field");
    if (!a.f->same(*b.f)) fail(Errc::MixedFields, "operands from different fields");
    return *a.f;
}

FieldElement operator+(FieldElement a, FieldElement b) {
    const Field& F = common_field(a, b);
    return {F.addv(a.v, b.v), a.f};
}
FieldElement operator-(FieldElement a, FieldElement b) {
    const Field& F = common_field(a, b);
    return {F.subv(a.v, b.v), a.f};
}
FieldElement operator-(FieldElement a) {
    if (!a.f) fail(Errc::MixedFields, "element has no field");
    return {a.f->negv(a.v), a.f};
}
FieldElement operator*(FieldElement a, FieldElement b) {
    const Field& F = common_field(a, b);
    return {F.mulv(a.v, b.v), a.f};
}
FieldElement operator/(FieldElement a, FieldElement b) {
    const Field& F = common_field(a, b);
    return {F.divv(a.v, b.v), a.f};
}
bool operator==(FieldElement a, FieldElement b) {
    common_field(a, b);
    return a.v == b.v;
}
bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

FieldElement inv(FieldElement a) {
    if (!a.f) fail(Errc::MixedFields, "element has no field");
    return {a.f->invv(a.v), a.f};
}

int mult_order(FieldElement a) {
    if (a.is_zero()) fail(Errc::DivisionByZero, "order of zero");
    FieldElement x = a;
    int n = 1;
    while (!(x == a.f->one())) {
        x = x * a;
        ++n;
    }
    return n;
}

} // namespace grasswt
