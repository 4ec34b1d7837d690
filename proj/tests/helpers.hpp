#pragma once

#include <catch2/catch_amalgamated.hpp>
#include "fuscat/report.hpp"
#include <random>

namespace th {

inline fuscat::FusionCategoryData load(const std::string& name) {
    return fuscat::load_category("data/" + name + ".json");
}

inline fuscat::FusionCategoryData load_fair(const std::string& name) {
    auto [fair, gt] = fuscat::make_fair_basis(load(name));
    return fair;
}

// deterministic random gauge on all non-unit vertex spaces
inline fuscat::GaugeTransform random_gauge(const fuscat::FusionRing& ring,
                                           unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    fuscat::GaugeTransform gt;
    for (int i = 0; i < ring.size(); ++i)
        for (int j = 0; j < ring.size(); ++j)
            for (int k = 0; k < ring.size(); ++k) {
                if (j == ring.unit || k == ring.unit) continue;
                int n = ring.N(i, j, k);
                if (n == 0) continue;
                fuscat::Mat g;
                do {
                    g = fuscat::Mat(n, n);
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            g(a, b) = fuscat::cplx(u(rng), u(rng));
                } while (std::abs(g.determinant()) < 0.1);
                gt.g[{i, j, k}] = g;
            }
    return gt;
}

inline const double PHI = (1.0 + std::sqrt(5.0)) / 2.0;

} // namespace th
