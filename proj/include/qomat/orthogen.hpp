#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "qomat/latin.hpp"

namespace qomat {

// A table row (n, k, rot): cyclic Latin rectangles with k rows and rotation
// step rot over n columns have orthogonal incidence matrices over F2, for
// every choice of the initial permutation.
struct ParamTriplet {
    int n = 0;
    int k = 0;
    int rot = 0;

    auto operator<=>(const ParamTriplet&) const = default;
};

// True iff k is odd, no column repeats a value, and every cyclic offset d in
// [1, n) gives an even intersection |S0 ∩ Sd| of the identity-permutation
// column supports Sd = { (d + i*rot) mod n : 0 <= i < k }. Intersection
// sizes are permutation-independent, so this certifies orthogonality of the
// incidence matrix for every initial permutation.
bool is_orthogonal_triplet(int n, int k, int rot);

// Smallest odd k >= 3 and, for that k, smallest rot that passes
// is_orthogonal_triplet. Throws OddDimension for odd n. The degenerate rows
// k = n - 1 with gcd(n, rot) = 1 pass the orthogonality check for every even
// n (the incidence matrix is the complement of a circulant permutation);
// they are excluded from the search, so k ranges over 3 .. min(n-3, 64).
std::optional<ParamTriplet> find_params(int n);

// find_params over every even n in [n_min, n_max]; misses are omitted.
std::vector<ParamTriplet> search_table(int n_min, int n_max);

// Column i of the result is the symmetric difference of the d_prev columns
// selected by column i of c. On the dense side this is the F2 product
// M_prev * M_c; here it is nothing but XOR of packed column bitmasks.
SupportSetMatrix support_product(const SupportSetMatrix& d_prev, const SupportSetMatrix& c);

struct GeneratorConfig {
    int n = 0;
    int iterations = 6;
    std::uint64_t seed = 0;
};

// Folds `iterations` random cyclic-Latin-rectangle incidence matrices into
// an orthogonal n x n binary matrix, starting from identity supports.
// Throws TripletNotFound when n has no table entry. Deterministic per seed.
SupportSetMatrix random_orthogonal_binary_matrix(const GeneratorConfig& cfg);

struct WeightStats {
    int min = 0;
    int max = 0;
    double mean = 0.0;
};

WeightStats weight_stats(const SupportSetMatrix& p);

}  // namespace qomat
