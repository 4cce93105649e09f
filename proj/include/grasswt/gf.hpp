#pragma once

#include <cstdint>
#include <vector>

#include "grasswt/error.hpp"

namespace grasswt {

class Field;

// Value in a specific finite field. `v` is the element's rank in the field's
// canonical enumeration (lexicographic on coefficient lists, constant term
// first), so zero is always rank 0 and, for prime fields, v is the residue.
// Elements remember their field; operations across distinct fields throw
// MixedFields instead of coercing.
struct FieldElement {
    uint8_t v = 0;
    const Field* f = nullptr;

    bool is_zero() const { return v == 0; }
    std::vector<int> coeffs() const; // constant term first, length e
};

class Field {
  public:
    // Constructs F_{p^e} with the canonical modulus: the lexicographically
    // smallest monic irreducible of degree e over F_p (coefficient lists
    // compared constant term first). Irreducibility is established by trial
    // division against all monic polynomials of degree <= e/2. max_q guards
    // the arithmetic-table sizes.
    Field(int p, int e, int max_q = 16);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    // Coefficient list of the modulus, constant term first, including the
    // leading 1 (length e+1). For e = 1 this is x itself, [0, 1].
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0, this}; }
    FieldElement one() const { return {one_, this}; }
    FieldElement element(int rank) const;
    FieldElement from_coeffs(const std::vector<int>& c) const;

    // All q elements in canonical order, zero first.
    std::vector<FieldElement> elements() const;

    // Rank-level arithmetic; matrix and search kernels use these directly.
    uint8_t addv(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t mulv(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t negv(uint8_t a) const { return neg_[a]; }
    uint8_t subv(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t invv(uint8_t a) const {
        if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
        return inv_[a];
    }
    uint8_t divv(uint8_t a, uint8_t b) const { return mulv(a, invv(b)); }
    uint8_t onev() const { return one_; }

    // Fields are equal when they have the same (p, e); the modulus is then
    // identical by construction.
    bool same(const Field& o) const { return this == &o || (p_ == o.p_ && e_ == o.e_); }

  private:
    int p_, e_, q_;
    uint8_t one_;
    std::vector<int> modulus_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

// Returns the shared field for the elements of an operation, or throws
// MixedFields. Also rejects default-constructed elements.
const Field& common_field(FieldElement a, FieldElement b);

// Process-lifetime field instances, one per (p, e); deserialized objects
// hang their field pointer off these.
const Field& cached_field(int p, int e = 1);

FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement operator/(FieldElement a, FieldElement b);
bool operator==(FieldElement a, FieldElement b);
bool operator!=(FieldElement a, FieldElement b);

FieldElement inv(FieldElement a);

// Multiplicative order of a nonzero element.
int mult_order(FieldElement a);

} // namespace grasswt
