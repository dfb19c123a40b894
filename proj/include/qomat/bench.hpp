#pragma once

#include <cstdint>

#include "qomat/orthogen.hpp"

namespace qomat {

struct BenchReport {
    int n = 0;
    int reps = 0;
    double support_ms_per_matrix = 0.0;
    double naive_ms_per_matrix = 0.0;
};

// Times the support-set generation path against the same chain folded with
// dense schoolbook F2 products. Both paths consume identical rectangles per
// rep (seed, seed+1, ...), and their results are compared before timing is
// reported. Throws TripletNotFound when n has no table entry.
BenchReport bench_generation(int n, int reps, std::uint64_t seed);

}  // namespace qomat
