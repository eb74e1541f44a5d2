#include "schoenberg/sphere_real.hpp"

#include <cmath>
#include <stdexcept>

#include "schoenberg/errors.hpp"
#include "schoenberg/quadrature.hpp"
#include "schoenberg/specfun.hpp"

namespace schoenberg {

using cplx = std::complex<double>;

namespace {

void axpy(RealCoefficientTable& table, int index, double scale, const GroupFunction& phi) {
    if (scale == 0.0) return;
    auto& slot = table.entries[index];
    if (slot.values.empty()) slot.values.assign(phi.values.size(), cplx(0.0, 0.0));
    for (size_t i = 0; i < phi.values.size(); ++i) slot.values[i] += scale * phi.values[i];
}

GroupFunction scaled(const GroupFunction& phi, double scale) {
    GroupFunction out;
    out.values.reserve(phi.values.size());
    for (const auto& v : phi.values) out.values.push_back(scale * v);
    return out;
}

cplx nth_central_difference(const RealOpaque& f, int n, int u, double h) {
    // sum_k (-1)^k binom(n,k) f((n/2 - k) h) / h^n, half-offsets for odd n
    cplx acc(0.0, 0.0);
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
        const double offset = (0.5 * n - k) * h;
        acc += (k % 2 == 0 ? binom : -binom) * f.eval(offset, u);
        binom = binom * (n - k) / (k + 1.0);
    }
    return acc / std::pow(h, n);
}

} // namespace

cplx extract_coefficient_real(const RealKernelModel& f, int n, int d, int u) {
    if (d < 1) throw std::domain_error("extract_coefficient_real: d >= 1 required");
    if (n < 0) throw std::domain_error("extract_coefficient_real: n >= 0 required");
    const double lambda = 0.5 * d - 1.0;
    const double dim = harmonic_dim_real_approx(d, n);
    auto integrand = [&](double x) { return evaluate(f, x, u) * gegenbauer_normalized(d, n, x); };

    const int deg = polynomial_degree(f);
    if (deg >= 0) {
        const int nodes = deg + n + 8;
        return dim * integrate_tau(integrand, lambda, nodes);
    }
    cplx prev(0.0, 0.0);
    for (int nodes = 128; nodes <= 2048; nodes *= 2) {
        const cplx cur = integrate_tau(integrand, lambda, nodes);
        if (nodes > 128 && std::abs(cur - prev) <= 1e-12 * std::max(1.0, std::abs(cur)))
            return dim * cur;
        prev = cur;
    }
    throw NumericalError("extract_coefficient_real: quadrature did not converge");
}

cplx evaluate_series_real(const RealCoefficientTable& coeffs, int d, double x, int u) {
    cplx acc(0.0, 0.0);
    for (const auto& [n, phi] : coeffs.entries) acc += phi.at(u) * gegenbauer_normalized(d, n, x);
    return acc;
}

RealCoefficientTable gegenbauer_to_monomial(const RealCoefficientTable& coeffs, int d) {
    RealCoefficientTable out;
    for (const auto& [n, phi] : coeffs.entries) {
        const auto mono = gegenbauer_monomial(d, n);
        for (int j = 0; j < static_cast<int>(mono.size()); ++j)
            if (!mono[j].is_zero()) axpy(out, j, mono[j].to_double(), phi);
    }
    return out;
}

cplx monomial_coefficients_real(const RealKernelModel& f, int n, int u) {
    if (n < 0) throw std::domain_error("monomial_coefficients_real: n >= 0 required");
    if (const auto* mono = std::get_if<RealMonomialSeries>(&f)) {
        const auto it = mono->coeffs.entries.find(n);
        return it == mono->coeffs.entries.end() ? cplx(0.0, 0.0) : it->second.at(u);
    }
    if (const auto* geg = std::get_if<GegenbauerSeries>(&f)) {
        const auto table = gegenbauer_to_monomial(geg->coeffs, geg->d);
        const auto it = table.entries.find(n);
        return it == table.entries.end() ? cplx(0.0, 0.0) : it->second.at(u);
    }
    const auto& opaque = std::get<RealOpaque>(f);
    if (n > opaque.smoothness_cap)
        throw std::invalid_argument("monomial_coefficients_real: smoothness cap exceeded");
    if (n == 0) return opaque.eval(0.0, u);
    // Richardson cascade h, h/2, h/4 on the O(h^2) central difference
    const double h = 1e-2;
    const cplx d1 = nth_central_difference(opaque, n, u, h);
    const cplx d2 = nth_central_difference(opaque, n, u, 0.5 * h);
    const cplx d3 = nth_central_difference(opaque, n, u, 0.25 * h);
    const cplx r1 = (4.0 * d2 - d1) / 3.0;
    const cplx r2 = (4.0 * d3 - d2) / 3.0;
    cplx deriv = (16.0 * r2 - r1) / 15.0;
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    return deriv / fact;
}

std::pair<GegenbauerSeries, GegenbauerSeries> derivative_split(const GegenbauerSeries& f) {
    const int dd = f.d;
    if (dd < 3)
        throw std::invalid_argument("derivative_split: the series level must be at least 3");
    const int d = dd - 2;
    GegenbauerSeries f1{d, {}}, f2{d, {}};
    if (f.coeffs.entries.empty()) return {f1, f2};
    const int K = f.coeffs.max_degree();

    // level-d coefficients of f, recovered by extraction
    std::vector<GroupFunction> low(K + 1);
    const size_t order = f.coeffs.entries.begin()->second.values.size();
    const RealKernelModel model{f};
    for (int k = 0; k <= K; ++k) {
        low[k].values.resize(order);
        for (size_t u = 0; u < order; ++u)
            low[k].values[u] = extract_coefficient_real(model, k, d, static_cast<int>(u));
    }
    auto high = [&](int k) {
        const auto it = f.coeffs.entries.find(k);
        return it == f.coeffs.entries.end() ? GroupFunction{std::vector<cplx>(order, cplx(0, 0))}
                                            : it->second;
    };

    if (d >= 2) {
        for (int n = 0; n + 1 <= K; ++n) {
            const double w =
                d * (2.0 * n + d - 1.0) * (n + 1.0) / ((2.0 * n + d + 1.0) * (n + d - 1.0));
            f1.coeffs.entries[n] = scaled(low[n + 1], w);
        }
        for (int n = 2; n - 1 <= K; ++n) {
            const double w = d * (n - 1.0) / (n + d - 1.0);
            f2.coeffs.entries[n] = scaled(high(n - 1), w);
        }
    } else {
        // d = 1 has its own series
        if (K >= 1) f1.coeffs.entries[0] = scaled(low[1], 0.5);
        for (int n = 1; n + 1 <= K; ++n) f1.coeffs.entries[n] = low[n + 1];
        for (int n = 2; n - 1 <= K; ++n)
            f2.coeffs.entries[n] = scaled(high(n - 1), (n - 1.0) / n);
    }
    return {f1, f2};
}

std::vector<LimitRow> limit_study_real(const RealKernelModel& f, int n,
                                       const std::vector<int>& d_list, int element,
                                       const GroupSpec& g) {
    std::vector<LimitRow> rows;
    rows.reserve(d_list.size());
    for (int d : d_list) {
        if (element >= 0) {
            const cplx v = extract_coefficient_real(f, n, d, element);
            const cplx target = monomial_coefficients_real(f, n, element);
            rows.push_back({d, element, v, std::abs(v - target)});
        } else {
            double worst = 0.0;
            cplx at_identity(0.0, 0.0);
            for (int u = 0; u < g.order; ++u) {
                const cplx v = extract_coefficient_real(f, n, d, u);
                const cplx target = monomial_coefficients_real(f, n, u);
                worst = std::max(worst, std::abs(v - target));
                if (u == 0) at_identity = v;
            }
            rows.push_back({d, 0, at_identity, worst});
        }
    }
    return rows;
}

RealCoefficientTable expand_opaque_real(const RealKernelModel& f, int d, int group_order,
                                        double tail_tol, int max_index) {
    RealCoefficientTable table;
    int quiet = 0;
    for (int n = 0; n <= max_index; ++n) {
        GroupFunction phi;
        phi.values.resize(group_order);
        for (int u = 0; u < group_order; ++u) phi.values[u] = extract_coefficient_real(f, n, d, u);
        table.entries[n] = phi;
        quiet = std::abs(phi.at(0)) < tail_tol ? quiet + 1 : 0;
        if (quiet >= 3) return table;
    }
    throw NumericalError("expand_opaque_real: tail criterion not reached by degree " +
                         std::to_string(max_index));
}

} // namespace schoenberg
