#include "schoenberg/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "schoenberg/errors.hpp"

namespace schoenberg {

using cplx = std::complex<double>;

double GaussJacobiRule::total_weight() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

GaussJacobiRule gauss_jacobi_rule(double a, double b, int n) {
    if (a <= -1.0 || b <= -1.0)
        throw std::domain_error("gauss_jacobi_rule: alpha, beta > -1 required");
    if (n < 1) throw std::domain_error("gauss_jacobi_rule: at least one node required");

    // Jacobi matrix of the monic orthogonal polynomials for (1-x)^a (1+x)^b.
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    diag(0) = (b - a) / (a + b + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        diag(k) = (b * b - a * a) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double bk;
        if (k == 1) {
            bk = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
        } else {
            const double s = 2.0 * k + a + b;
            bk = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
        }
        sub(k - 1) = std::sqrt(bk);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw NumericalError("gauss_jacobi_rule: tridiagonal eigensolve did not converge");

    // zeroth moment 2^{a+b+1} B(a+1, b+1)
    const double mu0 =
        std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                 std::lgamma(a + b + 2.0));

    GaussJacobiRule rule;
    rule.alpha = a;
    rule.beta = b;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v * v;
    }
    return rule;
}

namespace {

using RuleKey = std::tuple<double, double, int>;
std::map<RuleKey, std::shared_ptr<const GaussJacobiRule>> rule_cache;  // NOLINT
std::shared_mutex rule_cache_mutex;                                    // NOLINT

} // namespace

std::shared_ptr<const GaussJacobiRule> cached_gauss_jacobi_rule(double a, double b, int n) {
    const RuleKey key{a, b, n};
    {
        std::shared_lock lock(rule_cache_mutex);
        auto it = rule_cache.find(key);
        if (it != rule_cache.end()) return it->second;
    }
    auto rule = std::make_shared<const GaussJacobiRule>(gauss_jacobi_rule(a, b, n));
    std::unique_lock lock(rule_cache_mutex);
    return rule_cache.try_emplace(key, std::move(rule)).first->second;
}

cplx integrate_tau(const std::function<cplx(double)>& g, double lambda, int nodes) {
    const auto rule = cached_gauss_jacobi_rule(lambda, lambda, nodes);
    const double total = rule->total_weight();
    cplx acc(0.0, 0.0);
    for (size_t i = 0; i < rule->nodes.size(); ++i) acc += rule->weights[i] * g(rule->nodes[i]);
    return acc / total;
}

DiscRule disc_rule(double alpha, int radial_nodes, int angular) {
    if (angular < 1) throw std::domain_error("disc_rule: at least one angle required");
    return {alpha, cached_gauss_jacobi_rule(alpha, 0.0, radial_nodes), angular};
}

cplx integrate_disc(const DiscRule& rule, const std::function<cplx(cplx)>& g) {
    const auto& radial = *rule.radial;
    const double total = radial.total_weight();
    const int M = rule.angular;
    cplx acc(0.0, 0.0);
    for (size_t i = 0; i < radial.nodes.size(); ++i) {
        const double r = std::sqrt(0.5 * (1.0 + radial.nodes[i]));
        cplx ring(0.0, 0.0);
        for (int j = 0; j < M; ++j) ring += g(std::polar(r, 2.0 * M_PI * j / M));
        acc += radial.weights[i] * ring;
    }
    return acc / (total * static_cast<double>(M));
}

cplx integrate_nu(const std::function<cplx(cplx)>& g, double alpha, int radial_nodes,
                  int angular) {
    return integrate_disc(disc_rule(alpha, radial_nodes, angular), g);
}

std::vector<ProbeRow> delta_convergence_probe_tau(const std::function<cplx(double)>& g,
                                                  const std::vector<double>& lambdas, int nodes) {
    const cplx at0 = g(0.0);
    std::vector<ProbeRow> rows;
    rows.reserve(lambdas.size());
    for (double lambda : lambdas) {
        const cplx v = integrate_tau(g, lambda, nodes);
        rows.push_back({lambda, v, std::abs(v - at0)});
    }
    return rows;
}

std::vector<ProbeRow> delta_convergence_probe_nu(const std::function<cplx(cplx)>& g,
                                                 const std::vector<double>& alphas,
                                                 int radial_nodes, int angular) {
    const cplx at0 = g(cplx(0.0, 0.0));
    std::vector<ProbeRow> rows;
    rows.reserve(alphas.size());
    for (double alpha : alphas) {
        const cplx v = integrate_nu(g, alpha, radial_nodes, angular);
        rows.push_back({alpha, v, std::abs(v - at0)});
    }
    return rows;
}

} // namespace schoenberg
