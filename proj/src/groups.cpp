#include "schoenberg/groups.hpp"

#include <cmath>
#include <stdexcept>

#include "schoenberg/psd.hpp"

namespace schoenberg {

using cplx = std::complex<double>;

GroupSpec make_cyclic(int k) {
    if (k < 1) throw std::invalid_argument("make_cyclic: order >= 1 required");
    GroupSpec g;
    g.order = k;
    g.mul.resize(static_cast<size_t>(k) * k);
    g.inv.resize(k);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) g.mul[static_cast<size_t>(a) * k + b] = (a + b) % k;
        g.inv[a] = (k - a) % k;
    }
    return g;
}

GroupSpec make_product(const GroupSpec& a, const GroupSpec& b) {
    GroupSpec g;
    g.order = a.order * b.order;
    g.mul.resize(static_cast<size_t>(g.order) * g.order);
    g.inv.resize(g.order);
    // element (x, y) encoded as x * b.order + y
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1) {
            const int e1 = x1 * b.order + y1;
            g.inv[e1] = a.inverse(x1) * b.order + b.inverse(y1);
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2) {
                    const int e2 = x2 * b.order + y2;
                    g.mul[static_cast<size_t>(e1) * g.order + e2] =
                        a.op(x1, x2) * b.order + b.op(y1, y2);
                }
        }
    return g;
}

GroupSpec make_from_table(int order, const std::vector<int>& mul) {
    if (order < 1) throw std::invalid_argument("make_from_table: order >= 1 required");
    if (mul.size() != static_cast<size_t>(order) * order)
        throw std::invalid_argument("make_from_table: table size must be order^2");
    for (size_t i = 0; i < mul.size(); ++i)
        if (mul[i] < 0 || mul[i] >= order)
            throw std::invalid_argument("make_from_table: entry " + std::to_string(i) +
                                        " out of range");
    GroupSpec g;
    g.order = order;
    g.mul = mul;
    for (int b = 0; b < order; ++b) {
        if (g.op(0, b) != b || g.op(b, 0) != b)
            throw std::invalid_argument("make_from_table: element 0 is not a two-sided identity "
                                        "(witness element " +
                                        std::to_string(b) + ")");
    }
    g.inv.assign(order, -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b)
            if (g.op(a, b) == 0 && g.op(b, a) == 0) {
                g.inv[a] = b;
                break;
            }
        if (g.inv[a] < 0)
            throw std::invalid_argument("make_from_table: element " + std::to_string(a) +
                                        " has no two-sided inverse");
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    throw std::invalid_argument(
                        "make_from_table: associativity fails at witness triple (" +
                        std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) +
                        ")");
    return g;
}

bool hermitian_symmetric(const GroupFunction& phi, const GroupSpec& g, double tol) {
    double scale = 0.0;
    for (const auto& v : phi.values) scale = std::max(scale, std::abs(v));
    for (int u = 0; u < g.order; ++u)
        if (std::abs(phi.at(g.inverse(u)) - std::conj(phi.at(u))) > tol * std::max(scale, 1.0))
            return false;
    return true;
}

PdVerdict pd_check_group(const GroupFunction& phi, const GroupSpec& g, double tol) {
    const int n = g.order;
    if (phi.values.size() != static_cast<size_t>(n))
        throw std::invalid_argument("pd_check_group: phi must be total on the group");
    std::vector<cplx> M(static_cast<size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) M[static_cast<size_t>(u) * n + v] = phi.at(g.op(g.inverse(u), v));

    PdVerdict verdict;
    double scale = 0.0;
    for (const auto& e : M) scale = std::max(scale, std::abs(e));
    const double defect = hermitian_defect(M, n);
    if (defect > tol * std::max(scale, 1.0)) {
        verdict.kind = PdKind::non_hermitian;
        verdict.hermitian_defect = defect;
        return verdict;
    }

    const auto report = hermitian_min_eigen(M, n);
    verdict.min_eigenvalue = report.min_eigenvalue;
    verdict.trace = report.trace;
    if (report.min_eigenvalue >= -tol * std::abs(report.trace)) {
        verdict.kind = PdKind::pd;
        return verdict;
    }
    verdict.kind = PdKind::not_pd;
    verdict.witness = report.min_vector;
    verdict.witness_quadform = quadratic_form(M, n, report.min_vector);
    return verdict;
}

BochnerResult bochner_check_cyclic(const GroupFunction& phi, int k, double tol) {
    if (phi.values.size() != static_cast<size_t>(k))
        throw std::invalid_argument("bochner_check_cyclic: phi must be total on Z_k");
    BochnerResult r;
    r.spectrum.resize(k);
    for (int j = 0; j < k; ++j) {
        cplx acc(0.0, 0.0);
        for (int u = 0; u < k; ++u)
            acc += phi.at(u) * std::polar(1.0, -2.0 * M_PI * j * u / k);
        r.spectrum[j] = acc;
    }
    double scale = 0.0;
    for (const auto& s : r.spectrum) scale = std::max(scale, std::abs(s));
    r.pd = true;
    for (const auto& s : r.spectrum)
        if (s.real() < -tol * std::max(scale, 1.0) || std::abs(s.imag()) > tol * std::max(scale, 1.0))
            r.pd = false;
    return r;
}

} // namespace schoenberg
