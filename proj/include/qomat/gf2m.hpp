#pragma once

#include <cassert>
#include <cstdint>

#include "qomat/errors.hpp"

namespace qomat {

// Element of GF(2^m), encoded as the integer value of its coefficient
// vector: bit i holds the coefficient of x^i.
using Elem = std::uint16_t;

// A validated GF(2^m) instance: degree m in [2, 16] and an irreducible
// modulus polynomial given as a bitmask with bit m set.
class Field {
public:
    Field(unsigned m, std::uint32_t poly);

    unsigned degree() const { return m_; }
    std::uint32_t modulus() const { return poly_; }
    std::uint32_t order() const { return 1u << m_; }
    bool contains(Elem x) const { return x < order(); }

    Elem add(Elem x, Elem y) const {
        assert(contains(x) && contains(y));
        return static_cast<Elem>(x ^ y);
    }

    Elem mul(Elem x, Elem y) const;
    Elem square(Elem x) const { return mul(x, x); }

    // Multiplicative inverse; throws DivisionByZero on x = 0.
    Elem inv(Elem x) const;

    bool operator==(const Field&) const = default;

private:
    unsigned m_;
    std::uint32_t poly_;
};

inline Field make_field(unsigned m, std::uint32_t poly) { return Field(m, poly); }

}  // namespace qomat
