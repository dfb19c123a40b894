#include "qomat/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qomat {

namespace {

int checked_dim(int n) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    return n;
}

}  // namespace

BinaryMatrix::BinaryMatrix(int n)
    : n_(checked_dim(n)), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * words_, 0) {}

BinaryMatrix BinaryMatrix::identity(int n) {
    BinaryMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix bin_matmul(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("binary matmul: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    }
    const int n = a.dim();
    BinaryMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            unsigned acc = 0;
            for (int l = 0; l < n; ++l) acc ^= static_cast<unsigned>(a.get(i, l) & b.get(l, j));
            if (acc) out.set(i, j, true);
        }
    }
    return out;
}

BinaryMatrix bin_transpose(const BinaryMatrix& a) {
    const int n = a.dim();
    BinaryMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.get(i, j)) out.set(j, i, true);
    return out;
}

std::optional<BinaryMatrix> bin_inverse(const BinaryMatrix& a) {
    const int n = a.dim();
    const int w = (n + 63) / 64;
    // Augmented system [A | I], one row = 2*w words.
    std::vector<std::uint64_t> aug(static_cast<std::size_t>(n) * 2 * w, 0);
    auto row = [&](int i) { return aug.data() + static_cast<std::size_t>(i) * 2 * w; };
    auto bit = [](const std::uint64_t* r, int j) -> bool { return (r[j / 64] >> (j % 64)) & 1u; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (a.get(i, j)) row(i)[j / 64] |= std::uint64_t{1} << (j % 64);
        const int j = n + i;
        row(i)[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (bit(row(r), col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) std::swap_ranges(row(pivot), row(pivot) + 2 * w, row(col));
        for (int r = 0; r < n; ++r) {
            if (r != col && bit(row(r), col)) {
                for (int k = 0; k < 2 * w; ++k) row(r)[k] ^= row(col)[k];
            }
        }
    }
    BinaryMatrix inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (bit(row(i), n + j)) inv.set(i, j, true);
    return inv;
}

bool is_identity(const BinaryMatrix& a) {
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.get(i, j) != (i == j)) return false;
    return true;
}

FieldMatrix::FieldMatrix(int n, const Field& field)
    : n_(checked_dim(n)), field_(field), entries_(static_cast<std::size_t>(n) * n, 0) {}

FieldMatrix FieldMatrix::identity(int n, const Field& field) {
    FieldMatrix m(n, field);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FieldMatrix field_matmul(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("field matmul: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    }
    if (!(a.field() == b.field())) throw FieldMismatch("field matmul: operands in different fields");
    const int n = a.dim();
    const Field& f = a.field();
    FieldMatrix out(n, f);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Elem acc = 0;
            for (int l = 0; l < n; ++l) acc = f.add(acc, f.mul(a.get(i, l), b.get(l, j)));
            out.set(i, j, acc);
        }
    }
    return out;
}

bool is_identity(const FieldMatrix& a) {
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.get(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace qomat
