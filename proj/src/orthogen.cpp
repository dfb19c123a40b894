#include "qomat/orthogen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qomat {

bool is_orthogonal_triplet(int n, int k, int rot) {
    if (n < 2 || k < 1 || k > n || rot < 1 || rot >= n) return false;
    if (k % 2 == 0) return false;
    for (int i = 1; i < k; ++i) {
        if (static_cast<long long>(i) * rot % n == 0) return false;
    }
    std::vector<char> in_s0(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k; ++i) {
        in_s0[static_cast<std::size_t>(static_cast<long long>(i) * rot % n)] = 1;
    }
    for (int d = 1; d < n; ++d) {
        unsigned parity = 0;
        for (int i = 0; i < k; ++i) {
            parity ^= in_s0[static_cast<std::size_t>((d + static_cast<long long>(i) * rot) % n)];
        }
        if (parity != 0) return false;
    }
    return true;
}

std::optional<ParamTriplet> find_params(int n) {
    if (n % 2 != 0) {
        throw OddDimension("no parameter triplets exist for odd n = " + std::to_string(n));
    }
    const int k_max = std::min(n - 3, 64);
    for (int k = 3; k <= k_max; k += 2) {
        for (int rot = 1; rot < n; ++rot) {
            if (is_orthogonal_triplet(n, k, rot)) return ParamTriplet{n, k, rot};
        }
    }
    return std::nullopt;
}

std::vector<ParamTriplet> search_table(int n_min, int n_max) {
    std::vector<ParamTriplet> out;
    int n = n_min + (n_min % 2 != 0 ? 1 : 0);
    n = std::max(n, 4);
    for (; n <= n_max; n += 2) {
        if (auto triplet = find_params(n)) out.push_back(*triplet);
    }
    return out;
}

SupportSetMatrix support_product(const SupportSetMatrix& d_prev, const SupportSetMatrix& c) {
    if (d_prev.dim() != c.dim()) {
        throw DimensionMismatch("support product: " + std::to_string(d_prev.dim()) + " vs " +
                                std::to_string(c.dim()));
    }
    const int n = c.dim();
    const int stride = d_prev.words_per_column();
    SupportSetMatrix out(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t* dst = out.column(i);
        for (int l : c.column_support(i)) {
            const std::uint64_t* src = d_prev.column(l);
            for (int w = 0; w < stride; ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

SupportSetMatrix random_orthogonal_binary_matrix(const GeneratorConfig& cfg) {
    if (cfg.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    const auto triplet = find_params(cfg.n);
    if (!triplet) {
        throw TripletNotFound("no (n, k, rot) table entry for n = " + std::to_string(cfg.n));
    }
    Rng rng(cfg.seed);
    SupportSetMatrix d = SupportSetMatrix::identity(cfg.n);
    for (int round = 0; round < cfg.iterations; ++round) {
        CyclicLatinRectangle rect(random_permutation(cfg.n, rng), triplet->k, triplet->rot);
        d = support_product(d, incidence(rect));
    }
    return d;
}

WeightStats weight_stats(const SupportSetMatrix& p) {
    const int n = p.dim();
    WeightStats stats;
    stats.min = n + 1;
    long long total = 0;
    for (int j = 0; j < n; ++j) {
        const int w = p.column_weight(j);
        stats.min = std::min(stats.min, w);
        stats.max = std::max(stats.max, w);
        total += w;
    }
    stats.mean = static_cast<double>(total) / n;
    return stats;
}

}  // namespace qomat
