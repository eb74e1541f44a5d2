// Expansion calculus on Omega_{2q} x L: disc-polynomial extraction, series
// evaluation, the exact basis change to (z, conj z) monomials, the walk
// relating level-q coefficients to level q+1, group averaging into a
// single-variable disc kernel, the c in {1, -1, i} recovery of group
// coefficients from averaged kernels, and the q -> infinity study.

#pragma once

#include <array>
#include <complex>
#include <vector>

#include "schoenberg/groups.hpp"
#include "schoenberg/kernels.hpp"
#include "schoenberg/sphere_real.hpp" // LimitRow

namespace schoenberg {

// phi^{q-2}_{m,n}(u) = N(q;m,n) int f(z,u) conj(R^{q-2}_{m,n}(z)) dnu_{q-2}(z)
std::complex<double> extract_coefficient_complex(const ComplexKernelModel& f, int m, int n, int q,
                                                 int u);

std::complex<double> evaluate_series_complex(const ComplexCoefficientTable& coeffs, int q,
                                             std::complex<double> z, int u);

// Exact level-q disc-polynomial -> monomial basis change.
ComplexCoefficientTable disc_to_monomial(const ComplexCoefficientTable& coeffs, int q);

// phi_{m,n}(u) of the (z, conj z) power series; equals the mixed Wirtinger
// derivative at 0 over m! n!. Opaque models require smoothness_cap >= m+n.
std::complex<double> monomial_coefficients_complex(const ComplexKernelModel& f, int m, int n,
                                                   int u);

// Coefficients at level q mapped to level q+1:
//   phi^{q-1}_{m,n} = (m+q-1)(n+q-1) / ((q-1)(m+n+q-1)) phi^{q-2}_{m,n}
//                   - (m+1)(n+1) / ((q-1)(m+n+q+1))     phi^{q-2}_{m+1,n+1}
ComplexCoefficientTable dimension_walk(const ComplexCoefficientTable& coeffs, int q);

struct InequalityViolation {
    int m = 0, n = 0;
    double lhs = 0.0, rhs = 0.0;
};

// For kernels on Omega_{2q+2}: checks the identity-element coefficient
// inequality implied by the walk; returns the offending indices.
std::vector<InequalityViolation> coefficient_inequality_check(const ComplexCoefficientTable& coeffs,
                                                              int q, double tol = 1e-12);

// F(z) = sum_{j,k} f(z, u_j^{-1} u_k) c_j conj(c_k); a kernel over the
// trivial group (the element argument of the result is ignored).
ComplexKernelModel group_average(const ComplexKernelModel& f, const GroupSpec& g,
                                 const std::vector<int>& us,
                                 const std::vector<std::complex<double>>& cs);

struct RecoveryResult {
    std::complex<double> phi;
    std::array<std::complex<double>, 3> a; // coefficients of F_{u,c}, c = 1, -1, i
};

// Recovers phi_{m,n}(u) from the monomial coefficients of the averaged
// kernels F_{u,c}, c in {1, -1, i}. Each a must be (numerically)
// nonnegative; a value below -tol throws std::domain_error, signalling that
// f is not a kernel of the infinite-dimensional class.
RecoveryResult recover_group_coefficients(const ComplexKernelModel& f, const GroupSpec& g, int u,
                                          int m, int n, double tol = 1e-10);

std::vector<LimitRow> limit_study_complex(const ComplexKernelModel& f, int m, int n,
                                          const std::vector<int>& q_list, int element,
                                          const GroupSpec& g);

struct DiscLimitRow {
    double alpha = 0.0;
    double sup_deviation = 0.0; // sup over the grid of |R^alpha_{m,n} - z^m conj(z)^n|
};

// Per-alpha sup-norm of the deviation from the monomial limit on a grid
// strictly inside the open disc. Reported per (m,n); nothing is claimed
// about uniformity in the indices.
std::vector<DiscLimitRow> disc_limit_diagnostic(int m, int n, const std::vector<double>& alphas,
                                                const std::vector<std::complex<double>>& grid);

} // namespace schoenberg
