// Hermitian positive-semidefiniteness analysis shared by the group-level
// and sphere-level positivity checks.

#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace schoenberg {

struct PsdReport {
    double min_eigenvalue = 0.0;
    double trace = 0.0;
    // Unit eigenvector for the smallest eigenvalue; the witness candidate
    // when the matrix is indefinite.
    std::vector<std::complex<double>> min_vector;
};

// flat is a row-major n-by-n matrix assumed hermitian up to the caller's
// tolerance (the solver reads the lower triangle). Throws NumericalError if
// the eigenvalue iteration does not converge.
PsdReport hermitian_min_eigen(const std::vector<std::complex<double>>& flat, int n);

// max_{i,j} |M(i,j) - conj(M(j,i))|; where receives an offending pair.
double hermitian_defect(const std::vector<std::complex<double>>& flat, int n,
                        std::pair<int, int>* where = nullptr);

// Quadratic form sum_{j,k} conj(c_j) M(j,k) c_k, evaluated by plain
// summation. Used to re-validate indefiniteness witnesses without trusting
// the eigensolver.
double quadratic_form(const std::vector<std::complex<double>>& flat, int n,
                      const std::vector<std::complex<double>>& c);

} // namespace schoenberg
