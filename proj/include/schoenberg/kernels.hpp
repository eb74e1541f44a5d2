// Kernel models on [-1,1] x L and on the closed disc x L.
//
// A kernel is either a finitely supported series in the sphere-adapted
// basis (ultraspherical at level d, disc polynomials at level q), a
// finitely supported series in plain monomials, or an opaque evaluator.
// Series coefficients are functions on the group; their l^1 mass at the
// identity bounds every coefficient uniformly.

#pragma once

#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <variant>

#include "schoenberg/groups.hpp"

namespace schoenberg {

struct RealCoefficientTable {
    std::map<int, GroupFunction> entries; // degree n -> phi_n

    double mass_at_identity() const;    // sum of Re phi_n(e)
    int max_degree() const;             // -1 when empty
    double tail_mass_beyond(int N) const; // sum_{n > N} |phi_n(e)|
};

struct ComplexCoefficientTable {
    std::map<std::pair<int, int>, GroupFunction> entries; // (m,n) -> phi_{m,n}

    double mass_at_identity() const;
    int max_total_degree() const;       // max (m+n), -1 when empty
    int max_frequency() const;          // max |m-n|, 0 when empty
    double tail_mass_beyond(int N) const; // total degree > N
};

struct GegenbauerSeries {
    int d = 2;
    RealCoefficientTable coeffs;
};

struct RealMonomialSeries {
    RealCoefficientTable coeffs;
};

struct RealOpaque {
    std::function<std::complex<double>(double, int)> eval; // (x, element)
    int smoothness_cap = 0; // highest derivative order the caller vouches for
};

using RealKernelModel = std::variant<GegenbauerSeries, RealMonomialSeries, RealOpaque>;

std::complex<double> evaluate(const RealKernelModel& f, double x, int u);
int polynomial_degree(const RealKernelModel& f); // -1 for opaque models

struct DiscSeries {
    int q = 2;
    ComplexCoefficientTable coeffs;
};

struct ComplexMonomialSeries {
    ComplexCoefficientTable coeffs;
};

struct ComplexOpaque {
    std::function<std::complex<double>(std::complex<double>, int)> eval; // (z, element)
    int smoothness_cap = 0;
};

using ComplexKernelModel = std::variant<DiscSeries, ComplexMonomialSeries, ComplexOpaque>;

std::complex<double> evaluate(const ComplexKernelModel& f, std::complex<double> z, int u);
int polynomial_degree(const ComplexKernelModel& f);    // max total degree, -1 for opaque
int angular_frequency_bound(const ComplexKernelModel& f); // max |m-n|, -1 for opaque

} // namespace schoenberg
