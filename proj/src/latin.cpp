#include "qomat/latin.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace qomat {

Permutation::Permutation(std::vector<int> elems) : elems_(std::move(elems)) {
    const int n = static_cast<int>(elems_.size());
    if (n == 0) throw std::invalid_argument("permutation must be nonempty");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : elems_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation of {0..n-1}");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation random_permutation(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    }
    return Permutation(std::move(v));
}

CyclicLatinRectangle::CyclicLatinRectangle(Permutation r0, int k, int rot)
    : r0_(std::move(r0)), k_(k), rot_(rot) {
    const int n = r0_.size();
    if (k_ < 1 || k_ > n) throw std::invalid_argument("row count k must be in [1, n]");
    if (rot_ < 1 || rot_ >= n) throw std::invalid_argument("rotation must be in [1, n)");
    for (int i = 1; i < k_; ++i) {
        if (static_cast<long long>(i) * rot_ % n == 0) {
            throw NotLatin("column values repeat: " + std::to_string(i) + "*" +
                           std::to_string(rot_) + " = 0 (mod " + std::to_string(n) + ")");
        }
    }
}

namespace {

int checked_dim(int n) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    return n;
}

}  // namespace

SupportSetMatrix::SupportSetMatrix(int n)
    : n_(checked_dim(n)), stride_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * stride_, 0) {}

SupportSetMatrix SupportSetMatrix::identity(int n) {
    SupportSetMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

std::vector<int> SupportSetMatrix::column_support(int col) const {
    std::vector<int> out;
    const std::uint64_t* words = column(col);
    for (int w = 0; w < stride_; ++w) {
        std::uint64_t word = words[w];
        while (word != 0) {
            out.push_back(w * 64 + std::countr_zero(word));
            word &= word - 1;
        }
    }
    return out;
}

int SupportSetMatrix::column_weight(int col) const {
    int weight = 0;
    const std::uint64_t* words = column(col);
    for (int w = 0; w < stride_; ++w) weight += std::popcount(words[w]);
    return weight;
}

SupportSetMatrix incidence(const CyclicLatinRectangle& rect) {
    const int n = rect.columns();
    const int k = rect.rows();
    SupportSetMatrix m(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < k; ++i) m.set(rect.at(i, j), j);
    return m;
}

SupportSetMatrix transpose(const SupportSetMatrix& s) {
    const int n = s.dim();
    SupportSetMatrix out(n);
    for (int j = 0; j < n; ++j)
        for (int i : s.column_support(j)) out.set(j, i);
    return out;
}

BinaryMatrix supports_to_dense(const SupportSetMatrix& s) {
    const int n = s.dim();
    BinaryMatrix out(n);
    for (int j = 0; j < n; ++j)
        for (int i : s.column_support(j)) out.set(i, j, true);
    return out;
}

SupportSetMatrix supports_from_dense(const BinaryMatrix& a) {
    const int n = a.dim();
    SupportSetMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.get(i, j)) out.set(i, j);
    return out;
}

}  // namespace qomat
