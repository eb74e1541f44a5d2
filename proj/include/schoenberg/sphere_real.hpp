// Expansion calculus on S^d x L: coefficient extraction against the
// ultraspherical basis, series evaluation, the exact basis change to
// monomials, the derivative split with its norm bound, and the study of how
// the level-d coefficients approach the power-series coefficients as d
// grows.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schoenberg/groups.hpp"
#include "schoenberg/kernels.hpp"

namespace schoenberg {

// phi_{n,d}(u) = N_n(d) int f(x,u) c_n(d,x) dtau_{d/2-1}(x). Exact for
// series models; opaque models use a doubling node count and throw
// NumericalError if the integral does not settle.
std::complex<double> extract_coefficient_real(const RealKernelModel& f, int n, int d, int u);

std::complex<double> evaluate_series_real(const RealCoefficientTable& coeffs, int d, double x,
                                          int u);

// Exact level-d ultraspherical -> monomial basis change.
RealCoefficientTable gegenbauer_to_monomial(const RealCoefficientTable& coeffs, int d);

// Coefficient phi_n(u) of the power-series expansion, equal to the n-th
// derivative at 0 over n!. Series models take the exact path; opaque models
// use Richardson-extrapolated central differences and require
// smoothness_cap >= n.
std::complex<double> monomial_coefficients_real(const RealKernelModel& f, int n, int u);

// For a series at level d+2, returns the pair (f1, f2) at level d with
//   (1-x^2) df/dx = f1 - f2   and   ||f_i|| <= d ||f||.
// The level-d coefficients of f are recovered by extraction.
std::pair<GegenbauerSeries, GegenbauerSeries> derivative_split(const GegenbauerSeries& f);

struct LimitRow {
    int dim = 0;
    int element = 0;
    std::complex<double> value;
    double abs_error = 0.0;
};

// One row per d: the extracted phi_{n,d} against the power-series
// coefficient phi_n. element < 0 reports the value at the identity and the
// maximum error over all group elements (the uniformity surrogate on a
// finite group).
std::vector<LimitRow> limit_study_real(const RealKernelModel& f, int n,
                                       const std::vector<int>& d_list, int element,
                                       const GroupSpec& g);

// Expand an opaque model at level d until the identity-element coefficient
// mass stays below tail_tol for three consecutive degrees.
RealCoefficientTable expand_opaque_real(const RealKernelModel& f, int d, int group_order,
                                        double tail_tol = 1e-10, int max_index = 64);

} // namespace schoenberg
