#include "schoenberg/kernels.hpp"

#include <cmath>

#include "schoenberg/specfun.hpp"

namespace schoenberg {

using cplx = std::complex<double>;

double RealCoefficientTable::mass_at_identity() const {
    double s = 0.0;
    for (const auto& [n, phi] : entries) s += phi.at(0).real();
    return s;
}

int RealCoefficientTable::max_degree() const {
    return entries.empty() ? -1 : entries.rbegin()->first;
}

double RealCoefficientTable::tail_mass_beyond(int N) const {
    double s = 0.0;
    for (const auto& [n, phi] : entries)
        if (n > N) s += std::abs(phi.at(0));
    return s;
}

double ComplexCoefficientTable::mass_at_identity() const {
    double s = 0.0;
    for (const auto& [mn, phi] : entries) s += phi.at(0).real();
    return s;
}

int ComplexCoefficientTable::max_total_degree() const {
    int deg = -1;
    for (const auto& [mn, phi] : entries) deg = std::max(deg, mn.first + mn.second);
    return deg;
}

int ComplexCoefficientTable::max_frequency() const {
    int k = 0;
    for (const auto& [mn, phi] : entries) k = std::max(k, std::abs(mn.first - mn.second));
    return k;
}

double ComplexCoefficientTable::tail_mass_beyond(int N) const {
    double s = 0.0;
    for (const auto& [mn, phi] : entries)
        if (mn.first + mn.second > N) s += std::abs(phi.at(0));
    return s;
}

cplx evaluate(const RealKernelModel& f, double x, int u) {
    return std::visit(
        [&](const auto& model) -> cplx {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, GegenbauerSeries>) {
                cplx acc(0.0, 0.0);
                for (const auto& [n, phi] : model.coeffs.entries)
                    acc += phi.at(u) * gegenbauer_normalized(model.d, n, x);
                return acc;
            } else if constexpr (std::is_same_v<T, RealMonomialSeries>) {
                cplx acc(0.0, 0.0);
                for (const auto& [n, phi] : model.coeffs.entries)
                    acc += phi.at(u) * std::pow(x, n);
                return acc;
            } else {
                return model.eval(x, u);
            }
        },
        f);
}

int polynomial_degree(const RealKernelModel& f) {
    return std::visit(
        [](const auto& model) -> int {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, RealOpaque>)
                return -1;
            else
                return model.coeffs.max_degree();
        },
        f);
}

cplx evaluate(const ComplexKernelModel& f, cplx z, int u) {
    return std::visit(
        [&](const auto& model) -> cplx {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, DiscSeries>) {
                cplx acc(0.0, 0.0);
                for (const auto& [mn, phi] : model.coeffs.entries)
                    acc += phi.at(u) *
                           disc_polynomial(model.q - 2.0, mn.first, mn.second, z);
                return acc;
            } else if constexpr (std::is_same_v<T, ComplexMonomialSeries>) {
                cplx acc(0.0, 0.0);
                const cplx zb = std::conj(z);
                for (const auto& [mn, phi] : model.coeffs.entries) {
                    cplx t = phi.at(u);
                    for (int p = 0; p < mn.first; ++p) t *= z;
                    for (int p = 0; p < mn.second; ++p) t *= zb;
                    acc += t;
                }
                return acc;
            } else {
                return model.eval(z, u);
            }
        },
        f);
}

int polynomial_degree(const ComplexKernelModel& f) {
    return std::visit(
        [](const auto& model) -> int {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, ComplexOpaque>)
                return -1;
            else
                return model.coeffs.max_total_degree();
        },
        f);
}

int angular_frequency_bound(const ComplexKernelModel& f) {
    return std::visit(
        [](const auto& model) -> int {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, ComplexOpaque>)
                return -1;
            else
                return model.coeffs.max_frequency();
        },
        f);
}

} // namespace schoenberg
