#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qomat/errors.hpp"
#include "qomat/gf2m.hpp"

namespace qomat {

// Dense n x n matrix over F2, one packed bitvector per row. This is the
// ground-truth side: every product here is a schoolbook loop and shares no
// code with the support-set kernel it is used to check.
class BinaryMatrix {
public:
    explicit BinaryMatrix(int n);

    static BinaryMatrix identity(int n);

    int dim() const { return n_; }

    bool get(int i, int j) const {
        return (rows_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] >>
                (static_cast<unsigned>(j) % 64)) &
               1u;
    }

    void set(int i, int j, bool v) {
        auto& w = rows_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64];
        const std::uint64_t mask = std::uint64_t{1} << (static_cast<unsigned>(j) % 64);
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }

    bool operator==(const BinaryMatrix&) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;
};

BinaryMatrix bin_matmul(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix bin_transpose(const BinaryMatrix& a);

// Gauss-Jordan inverse over F2; nullopt when the matrix is singular.
std::optional<BinaryMatrix> bin_inverse(const BinaryMatrix& a);

bool is_identity(const BinaryMatrix& a);

// Dense n x n matrix over GF(2^m).
class FieldMatrix {
public:
    FieldMatrix(int n, const Field& field);

    static FieldMatrix identity(int n, const Field& field);

    int dim() const { return n_; }
    const Field& field() const { return field_; }

    Elem get(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
    }

    void set(int i, int j, Elem v) {
        entries_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)] = v;
    }

    bool operator==(const FieldMatrix&) const = default;

private:
    int n_;
    Field field_;
    std::vector<Elem> entries_;
};

FieldMatrix field_matmul(const FieldMatrix& a, const FieldMatrix& b);
bool is_identity(const FieldMatrix& a);

}  // namespace qomat
