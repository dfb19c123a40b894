#include "qomat/quasi.hpp"

#include <string>
#include <utility>

namespace qomat {

namespace {

void check_pair(Elem a, Elem b, const Field& field) {
    if (!field.contains(a) || !field.contains(b)) {
        throw BadPair("substitution values must lie in the field");
    }
    if (a == 0 || b == 0) throw BadPair("substitution values must be nonzero");
    if (a == b) throw BadPair("substitution values must be distinct");
}

}  // namespace

QuasiBinaryMatrix::QuasiBinaryMatrix(SupportSetMatrix backbone, Elem a, Elem b, const Field& field)
    : backbone_(std::move(backbone)), a_(a), b_(b), field_(field) {
    check_pair(a_, b_, field_);
}

QuasiBinaryMatrix substitute(SupportSetMatrix p, Elem a, Elem b, const Field& field) {
    return QuasiBinaryMatrix(std::move(p), a, b, field);
}

InversePair inverse_pair(Elem a, Elem b, const Field& field) {
    check_pair(a, b, field);
    const Elem denom = field.add(field.square(a), field.square(b));
    const Elem denom_inv = field.inv(denom);
    return InversePair{field.mul(a, denom_inv), field.mul(b, denom_inv)};
}

InversePair solve_pair_system(Elem a, Elem b, const Field& field) {
    if (!field.contains(a) || !field.contains(b)) {
        throw SingularSystem("coefficients must lie in the field");
    }
    if (field.square(a) == field.square(b)) {
        throw SingularSystem("a^2 = b^2: the 2x2 system has no unique solution");
    }
    // [ a b | 1 ]
    // [ b a | 0 ]
    if (a == 0) {
        // b*d = 1 and b*c = 0 with b != 0.
        return InversePair{0, field.inv(b)};
    }
    const Elem factor = field.mul(b, field.inv(a));
    // Row 2 minus factor * row 1 leaves (a - b^2/a) * d = -factor; over
    // characteristic 2 subtraction is addition.
    const Elem reduced = field.add(a, field.mul(factor, b));
    const Elem rhs = factor;
    const Elem d = field.mul(rhs, field.inv(reduced));
    const Elem c = field.mul(field.add(1, field.mul(b, d)), field.inv(a));
    return InversePair{c, d};
}

QuasiBinaryMatrix quasi_inverse(const QuasiBinaryMatrix& q) {
    const InversePair pair = inverse_pair(q.a(), q.b(), q.field());
    return QuasiBinaryMatrix(transpose(q.backbone()), pair.c, pair.d, q.field());
}

FieldMatrix to_field_matrix(const QuasiBinaryMatrix& q) {
    const int n = q.dim();
    FieldMatrix out(n, q.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, q.a());
    for (int j = 0; j < n; ++j)
        for (int i : q.backbone().column_support(j)) out.set(i, j, q.b());
    return out;
}

bool verify_quasi_inverse(const QuasiBinaryMatrix& q, const QuasiBinaryMatrix& r) {
    if (q.dim() != r.dim()) {
        throw DimensionMismatch("quasi inverse check: " + std::to_string(q.dim()) + " vs " +
                                std::to_string(r.dim()));
    }
    if (!(q.field() == r.field())) {
        throw FieldMismatch("quasi inverse check: operands in different fields");
    }
    return is_identity(field_matmul(to_field_matrix(q), to_field_matrix(r)));
}

}  // namespace qomat
