// Orthogonal polynomial families and closed-form constants.
//
// Real spheres S^d use the ultraspherical polynomials c_n(d,x), normalized
// so that c_n(d,1) = 1; for d = 1 these are the Chebyshev polynomials.
// Complex spheres Omega_{2q} use the disc polynomials R^alpha_{m,n}(z) built
// from normalized Jacobi polynomials. Evaluation always goes through forward
// three-term recurrences; the exact monomial expansions exist separately for
// basis changes only.

#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "schoenberg/rational.hpp"

namespace schoenberg {

using cplx = std::complex<double>;

// (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
double pochhammer(double a, int k);

// B(a, b) for positive arguments, computed through log-gamma so that
// half-integer parameters from odd sphere dimensions stay in range.
double beta_function(double a, double b);

// Total surface measure sigma_d = 2 pi^{(d+1)/2} / Gamma((d+1)/2) of S^d.
double surface_mass(int d);

// Dimension N_n(d) of the degree-n spherical harmonics on S^d, exact.
long long harmonic_dim_real(int d, int n);

// N(q; m, n) = ((m+n+q-1)/(q-1)) binom(m+q-2, m) binom(n+q-2, n), exact.
long long harmonic_dim_complex(int q, int m, int n);

// As above but double-valued, falling back to a log-gamma evaluation when
// the exact integer would overflow 64 bits. Used for expansion prefactors.
double harmonic_dim_real_approx(int d, int n);

// c_n(d, x) with c_n(d, 1) = 1 for all n; d >= 1, |x| <= 1.
double gegenbauer_normalized(int d, int n, double x);

// R_k^{(alpha,beta)}(x) = P_k^{(alpha,beta)}(x) / P_k^{(alpha,beta)}(1).
double jacobi_normalized(double alpha, double beta, int k, double x);

// Disc polynomial R^alpha_{m,n}(r e^{i theta})
//   = r^{|m-n|} e^{i(m-n)theta} R^{(alpha,|m-n|)}_{min(m,n)}(2 r^2 - 1),
// for |z| <= 1. Satisfies conj(R_{m,n}(z)) = R_{n,m}(z) and |R_{m,n}| <= 1.
cplx disc_polynomial(double alpha, int m, int n, cplx z);

// Exact monomial expansion of c_n(d, .): coefficient of x^j at index j.
std::vector<Rational> gegenbauer_monomial(int d, int n);

// Exact monomial expansion of R_k^{(alpha,beta)} in powers of its argument.
std::vector<Rational> jacobi_monomial(const Rational& alpha, const Rational& beta, int k);

// Exact expansion of R^alpha_{m,n}(z) as sum c_{i,j} z^i conj(z)^j.
std::map<std::pair<int, int>, Rational> disc_monomial(const Rational& alpha, int m, int n);

} // namespace schoenberg
