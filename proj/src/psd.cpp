#include "schoenberg/psd.hpp"

#include <Eigen/Dense>

#include "schoenberg/errors.hpp"

namespace schoenberg {

PsdReport hermitian_min_eigen(const std::vector<std::complex<double>>& flat, int n) {
    Eigen::MatrixXcd M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, j) = flat[static_cast<size_t>(i) * n + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    if (es.info() != Eigen::Success)
        throw NumericalError("hermitian_min_eigen: eigenvalue iteration did not converge");
    PsdReport r;
    r.min_eigenvalue = es.eigenvalues()(0);
    r.trace = M.trace().real();
    r.min_vector.resize(n);
    for (int i = 0; i < n; ++i) r.min_vector[i] = es.eigenvectors()(i, 0);
    return r;
}

double hermitian_defect(const std::vector<std::complex<double>>& flat, int n,
                        std::pair<int, int>* where) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double d = std::abs(flat[static_cast<size_t>(i) * n + j] -
                                      std::conj(flat[static_cast<size_t>(j) * n + i]));
            if (d > worst) {
                worst = d;
                if (where) *where = {i, j};
            }
        }
    return worst;
}

double quadratic_form(const std::vector<std::complex<double>>& flat, int n,
                      const std::vector<std::complex<double>>& c) {
    std::complex<double> acc(0.0, 0.0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            acc += std::conj(c[j]) * flat[static_cast<size_t>(j) * n + k] * c[k];
    return acc.real();
}

} // namespace schoenberg
