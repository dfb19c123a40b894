#pragma once

#include <cstdint>
#include <vector>

#include "qomat/errors.hpp"
#include "qomat/oracle.hpp"
#include "qomat/rng.hpp"

namespace qomat {

// A bijection on {0, ..., n-1}.
class Permutation {
public:
    explicit Permutation(std::vector<int> elems);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(elems_.size()); }
    int operator[](int i) const { return elems_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& elems() const { return elems_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> elems_;
};

// Fisher-Yates shuffle driven by the caller's stream.
Permutation random_permutation(int n, Rng& rng);

// k x n array whose row i is r0 rotated left by i*rot positions. Rows are
// computed on demand; only (r0, k, rot) is stored.
class CyclicLatinRectangle {
public:
    // Throws NotLatin when some column would repeat a value, i.e. when
    // i*rot = 0 (mod n) for some 1 <= i < k.
    CyclicLatinRectangle(Permutation r0, int k, int rot);

    int columns() const { return r0_.size(); }
    int rows() const { return k_; }
    int rot() const { return rot_; }
    const Permutation& r0() const { return r0_; }

    int at(int i, int j) const {
        const int n = r0_.size();
        return r0_[static_cast<int>((static_cast<long long>(j) + static_cast<long long>(i) * rot_) % n)];
    }

private:
    Permutation r0_;
    int k_;
    int rot_;
};

inline CyclicLatinRectangle build_cyclic(Permutation r0, int k, int rot) {
    return CyclicLatinRectangle(std::move(r0), k, rot);
}

// n x n binary matrix stored as one packed bitmask per column: bit i of
// column j is entry (i, j). The column support sets read off the bitmasks
// in ascending index order, which is the canonical form everywhere.
class SupportSetMatrix {
public:
    explicit SupportSetMatrix(int n);

    static SupportSetMatrix identity(int n);

    int dim() const { return n_; }
    int words_per_column() const { return stride_; }

    bool get(int row, int col) const {
        return (column(col)[static_cast<std::size_t>(row) / 64] >> (static_cast<unsigned>(row) % 64)) & 1u;
    }

    void set(int row, int col) {
        column(col)[static_cast<std::size_t>(row) / 64] |= std::uint64_t{1}
                                                           << (static_cast<unsigned>(row) % 64);
    }

    const std::uint64_t* column(int col) const {
        return bits_.data() + static_cast<std::size_t>(col) * stride_;
    }
    std::uint64_t* column(int col) { return bits_.data() + static_cast<std::size_t>(col) * stride_; }

    std::vector<int> column_support(int col) const;
    int column_weight(int col) const;

    bool operator==(const SupportSetMatrix&) const = default;

private:
    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Incidence matrix of a Latin rectangle: column j collects the values that
// appear in column j of the rectangle.
SupportSetMatrix incidence(const CyclicLatinRectangle& rect);

SupportSetMatrix transpose(const SupportSetMatrix& s);

BinaryMatrix supports_to_dense(const SupportSetMatrix& s);
SupportSetMatrix supports_from_dense(const BinaryMatrix& a);

}  // namespace qomat
