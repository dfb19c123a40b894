#include "qomat/bench.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "qomat/oracle.hpp"

namespace qomat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

BenchReport bench_generation(int n, int reps, std::uint64_t seed) {
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");
    const auto triplet = find_params(n);
    if (!triplet) throw TripletNotFound("no (n, k, rot) table entry for n = " + std::to_string(n));

    BenchReport report;
    report.n = n;
    report.reps = reps;

    for (int rep = 0; rep < reps; ++rep) {
        GeneratorConfig cfg;
        cfg.n = n;
        cfg.seed = seed + static_cast<std::uint64_t>(rep);

        const auto t0 = Clock::now();
        const SupportSetMatrix fast = random_orthogonal_binary_matrix(cfg);
        report.support_ms_per_matrix += ms_since(t0);

        // Same rectangles, folded with dense schoolbook products.
        const auto t1 = Clock::now();
        Rng rng(cfg.seed);
        BinaryMatrix dense = BinaryMatrix::identity(n);
        for (int round = 0; round < cfg.iterations; ++round) {
            CyclicLatinRectangle rect(random_permutation(n, rng), triplet->k, triplet->rot);
            dense = bin_matmul(dense, supports_to_dense(incidence(rect)));
        }
        const double naive_ms = ms_since(t1);
        report.naive_ms_per_matrix += naive_ms;

        if (!(supports_to_dense(fast) == dense)) {
            throw std::logic_error("support path and dense path disagree");
        }
    }
    report.support_ms_per_matrix /= reps;
    report.naive_ms_per_matrix /= reps;
    return report;
}

}  // namespace qomat
