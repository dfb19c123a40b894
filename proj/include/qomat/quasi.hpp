#pragma once

#include "qomat/gf2m.hpp"
#include "qomat/latin.hpp"
#include "qomat/oracle.hpp"

namespace qomat {

// Substitution values (c, d) with a*c + b*d = 1 and b*c + a*d = 0.
struct InversePair {
    Elem c = 0;
    Elem d = 0;

    bool operator==(const InversePair&) const = default;
};

// An orthogonal binary backbone dressed with two nonzero field values: the
// backbone's one-entries read as b, everything else as a. Densification is
// an explicit conversion (to_field_matrix); the support form is the working
// representation.
class QuasiBinaryMatrix {
public:
    // Throws BadPair unless a and b are distinct, nonzero field elements.
    QuasiBinaryMatrix(SupportSetMatrix backbone, Elem a, Elem b, const Field& field);

    const SupportSetMatrix& backbone() const { return backbone_; }
    Elem a() const { return a_; }
    Elem b() const { return b_; }
    const Field& field() const { return field_; }
    int dim() const { return backbone_.dim(); }

private:
    SupportSetMatrix backbone_;
    Elem a_;
    Elem b_;
    Field field_;
};

QuasiBinaryMatrix substitute(SupportSetMatrix p, Elem a, Elem b, const Field& field);

// Closed form c = a/(a^2 + b^2), d = b/(a^2 + b^2); the denominator equals
// (a + b)^2 and vanishes exactly when a = b.
InversePair inverse_pair(Elem a, Elem b, const Field& field);

// Direct elimination on [a b | 1; b a | 0]. Agrees with inverse_pair in
// characteristic 2; throws SingularSystem when a^2 = b^2.
InversePair solve_pair_system(Elem a, Elem b, const Field& field);

// Transposed backbone with the pair replaced by inverse_pair(a, b).
QuasiBinaryMatrix quasi_inverse(const QuasiBinaryMatrix& q);

FieldMatrix to_field_matrix(const QuasiBinaryMatrix& q);

// Full dense field product check: true iff q * r is the identity matrix.
bool verify_quasi_inverse(const QuasiBinaryMatrix& q, const QuasiBinaryMatrix& r);

}  // namespace qomat
