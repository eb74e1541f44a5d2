// Shared generators for the randomized suites.

#pragma once

#include <complex>
#include <random>

#include "schoenberg/groups.hpp"

namespace schoenberg::testing {

inline std::complex<double> random_unit_box(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double re = u(rng);
    const double im = u(rng);
    return {re, im};
}

// Matrix coefficient of the left regular representation,
// phi(u) = sum_x h(u^{-1} x) conj(h(x)) for a random h, which is always
// positive definite with phi(e) = ||h||^2.
inline GroupFunction random_pd_function(const GroupSpec& g, std::mt19937_64& rng,
                                        double scale = 1.0) {
    std::vector<std::complex<double>> h(g.order);
    for (auto& v : h) v = random_unit_box(rng);
    GroupFunction phi;
    phi.values.assign(g.order, {0.0, 0.0});
    double norm2 = 0.0;
    for (const auto& v : h) norm2 += std::norm(v);
    const double factor = norm2 > 0 ? scale / norm2 : scale; // phi(e) == scale
    for (int u = 0; u < g.order; ++u) {
        std::complex<double> acc(0.0, 0.0);
        for (int x = 0; x < g.order; ++x) acc += h[g.op(g.inverse(u), x)] * std::conj(h[x]);
        phi.values[u] = acc * factor;
    }
    return phi;
}

// Random hermitian-symmetric function (phi(u^{-1}) = conj(phi(u))), not
// necessarily positive definite.
inline GroupFunction random_hermitian_function(const GroupSpec& g, std::mt19937_64& rng) {
    GroupFunction phi;
    phi.values.assign(g.order, {0.0, 0.0});
    std::vector<bool> set(g.order, false);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int a = 0; a < g.order; ++a) {
        if (set[a]) continue;
        const int b = g.inverse(a);
        if (a == b) {
            phi.values[a] = {u(rng), 0.0};
        } else {
            phi.values[a] = random_unit_box(rng);
            phi.values[b] = std::conj(phi.values[a]);
            set[b] = true;
        }
        set[a] = true;
    }
    return phi;
}

} // namespace schoenberg::testing
