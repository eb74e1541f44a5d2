// Gauss-Jacobi quadrature and the two probability measures of the expansion
// calculus:
//
//   tau_lambda = B(lambda+1, 1/2)^{-1} (1-x^2)^lambda dx        on [-1, 1]
//   nu_alpha   = ((alpha+1)/pi) (1-|z|^2)^alpha dx dy            on the disc
//
// The disc measure is handled by the substitution t = 2r^2 - 1, which turns
// the radial part into a Gauss-Jacobi (alpha, 0) rule, combined with
// equispaced angles. Rules are exact on polynomial integrands of degree
// <= 2*nodes - 1 (and angular frequencies below the aliasing limit).

#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

namespace schoenberg {

struct GaussJacobiRule {
    double alpha = 0.0, beta = 0.0;
    std::vector<double> nodes;   // ascending, inside (-1, 1)
    std::vector<double> weights; // positive; sum = 2^{a+b+1} B(a+1, b+1)

    double total_weight() const;
};

// Golub-Welsch nodes and weights for the weight (1-x)^alpha (1+x)^beta.
// Throws NumericalError if the symmetric tridiagonal eigensolve fails.
GaussJacobiRule gauss_jacobi_rule(double alpha, double beta, int n);

// Read-mostly cache keyed by (alpha, beta, n); safe for concurrent readers.
std::shared_ptr<const GaussJacobiRule> cached_gauss_jacobi_rule(double alpha, double beta, int n);

// Integral of g against tau_lambda.
std::complex<double> integrate_tau(const std::function<std::complex<double>(double)>& g,
                                   double lambda, int nodes);

struct DiscRule {
    double alpha = 0.0;
    std::shared_ptr<const GaussJacobiRule> radial; // on (alpha, 0), in t = 2r^2-1
    int angular = 1;                               // equispaced angles, weight 1/M each
};

DiscRule disc_rule(double alpha, int radial_nodes, int angular);

// Integral of g against nu_alpha, using the given rule.
std::complex<double> integrate_disc(const DiscRule& rule,
                                    const std::function<std::complex<double>(std::complex<double>)>& g);

std::complex<double> integrate_nu(const std::function<std::complex<double>(std::complex<double>)>& g,
                                  double alpha, int radial_nodes, int angular);

// Concentration probe: how fast integrals against tau_lambda / nu_alpha
// collapse onto the point evaluation at 0 as the parameter grows.
struct ProbeRow {
    double parameter = 0.0;
    std::complex<double> integral;
    double error = 0.0; // |integral - g(0)|
};

std::vector<ProbeRow> delta_convergence_probe_tau(
    const std::function<std::complex<double>(double)>& g, const std::vector<double>& lambdas,
    int nodes = 128);

std::vector<ProbeRow> delta_convergence_probe_nu(
    const std::function<std::complex<double>(std::complex<double>)>& g,
    const std::vector<double>& alphas, int radial_nodes = 128, int angular = 64);

} // namespace schoenberg
