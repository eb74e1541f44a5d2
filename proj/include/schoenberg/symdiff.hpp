// Exact symbolic differentiation for functions of the form
//   q(x) (1-x^2)^s          (real line, closed under d/dx)
//   p(z, conj z) (1-|z|^2)^s (disc, closed under the Wirtinger partials)
// with rational coefficients and rational exponent. The exponent drops by
// exactly one per derivative, which is the structural fact behind the
// boundary-vanishing of integration-by-parts terms: as long as fewer
// derivatives than s have been taken, the result still carries a positive
// power of the weight and vanishes at the boundary.
//
// Used to verify the Rodrigues formulas against the recurrence evaluators;
// everything stays exact until the final sample evaluation.

#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "schoenberg/rational.hpp"

namespace schoenberg {

struct WeightedPolynomial {
    std::vector<Rational> poly; // poly[j]: coefficient of x^j
    Rational exponent;          // s in (1-x^2)^s

    double eval(double x) const;
};

WeightedPolynomial derivative(const WeightedPolynomial& w);

struct WeightedBiPolynomial {
    std::map<std::pair<int, int>, Rational> poly; // (i,j): z^i conj(z)^j
    Rational exponent;                            // s in (1-|z|^2)^s

    std::complex<double> eval(std::complex<double> z) const;
};

WeightedBiPolynomial wirtinger_z(const WeightedBiPolynomial& w);
WeightedBiPolynomial wirtinger_zbar(const WeightedBiPolynomial& w);

// Max absolute deviation over the samples between the symbolically
// differentiated Rodrigues right-hand side and the recurrence evaluation of
// c_n(d, .). Samples must lie in (-1, 1). Throws std::invalid_argument when
// n exceeds the cap.
double rodrigues_check_real(int d, int n, const std::vector<double>& xs, int cap = 10);

// Complex analogue against R^{q-2}_{m,n}; samples must satisfy |z| < 1.
double rodrigues_check_complex(int q, int m, int n, const std::vector<std::complex<double>>& zs,
                               int cap = 10);

} // namespace schoenberg
