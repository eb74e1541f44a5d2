#include "schoenberg/sphere_complex.hpp"

#include <cmath>
#include <stdexcept>

#include "schoenberg/errors.hpp"
#include "schoenberg/quadrature.hpp"
#include "schoenberg/specfun.hpp"

namespace schoenberg {

using cplx = std::complex<double>;

namespace {

void axpy(ComplexCoefficientTable& table, std::pair<int, int> index, double scale,
          const GroupFunction& phi) {
    if (scale == 0.0) return;
    auto& slot = table.entries[index];
    if (slot.values.empty()) slot.values.assign(phi.values.size(), cplx(0.0, 0.0));
    for (size_t i = 0; i < phi.values.size(); ++i) slot.values[i] += scale * phi.values[i];
}

// mixed central difference d^a/dx^a d^b/dy^b at the origin, O(h^2)
cplx mixed_xy_difference(const ComplexOpaque& f, int a, int b, int u, double h) {
    cplx acc(0.0, 0.0);
    double wa = 1.0;
    for (int r = 0; r <= a; ++r) {
        const double x = (0.5 * a - r) * h;
        double wb = 1.0;
        cplx inner(0.0, 0.0);
        for (int s = 0; s <= b; ++s) {
            const double y = (0.5 * b - s) * h;
            inner += (s % 2 == 0 ? wb : -wb) * f.eval(cplx(x, y), u);
            wb = wb * (b - s) / (s + 1.0);
        }
        acc += (r % 2 == 0 ? wa : -wa) * inner;
        wa = wa * (a - r) / (r + 1.0);
    }
    return acc / std::pow(h, a + b);
}

// d^m/dz^m d^n/dzbar^n f(0, u) via the (dx -i dy)/2, (dx + i dy)/2 expansion
cplx wirtinger_difference(const ComplexOpaque& f, int m, int n, int u, double h) {
    const cplx I(0.0, 1.0);
    cplx acc(0.0, 0.0);
    double bm = 1.0;
    for (int j = 0; j <= m; ++j) {
        double bn = 1.0;
        for (int k = 0; k <= n; ++k) {
            cplx phase(1.0, 0.0);
            for (int p = 0; p < m - j; ++p) phase *= -I;
            for (int p = 0; p < n - k; ++p) phase *= I;
            acc += bm * bn * phase * mixed_xy_difference(f, j + k, (m - j) + (n - k), u, h);
            bn = bn * (n - k) / (k + 1.0);
        }
        bm = bm * (m - j) / (j + 1.0);
    }
    return acc / std::pow(2.0, m + n);
}

long long factorial_ll(int n) {
    long long r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

} // namespace

cplx extract_coefficient_complex(const ComplexKernelModel& f, int m, int n, int q, int u) {
    if (q < 2) throw std::domain_error("extract_coefficient_complex: q >= 2 required");
    if (m < 0 || n < 0)
        throw std::domain_error("extract_coefficient_complex: m, n >= 0 required");
    const double alpha = q - 2.0;
    const double dim = static_cast<double>(harmonic_dim_complex(q, m, n));
    auto integrand = [&](cplx z) {
        return evaluate(f, z, u) * std::conj(disc_polynomial(alpha, m, n, z));
    };

    const int deg = polynomial_degree(f);
    if (deg >= 0) {
        const int radial = (deg + m + n) / 2 + 8;
        const int angular = 2 * (angular_frequency_bound(f) + std::abs(m - n)) + 5;
        return dim * integrate_nu(integrand, alpha, radial, angular);
    }
    cplx prev(0.0, 0.0);
    int radial = 128, angular = 256;
    for (int round = 0; round < 5; ++round) {
        const cplx cur = integrate_nu(integrand, alpha, radial, angular);
        if (round > 0 && std::abs(cur - prev) <= 1e-12 * std::max(1.0, std::abs(cur)))
            return dim * cur;
        prev = cur;
        radial *= 2;
        angular *= 2;
    }
    throw NumericalError("extract_coefficient_complex: quadrature did not converge");
}

cplx evaluate_series_complex(const ComplexCoefficientTable& coeffs, int q, cplx z, int u) {
    cplx acc(0.0, 0.0);
    for (const auto& [mn, phi] : coeffs.entries)
        acc += phi.at(u) * disc_polynomial(q - 2.0, mn.first, mn.second, z);
    return acc;
}

ComplexCoefficientTable disc_to_monomial(const ComplexCoefficientTable& coeffs, int q) {
    ComplexCoefficientTable out;
    for (const auto& [mn, phi] : coeffs.entries) {
        const auto mono = disc_monomial(Rational(q - 2), mn.first, mn.second);
        for (const auto& [ij, c] : mono) axpy(out, ij, c.to_double(), phi);
    }
    return out;
}

cplx monomial_coefficients_complex(const ComplexKernelModel& f, int m, int n, int u) {
    if (m < 0 || n < 0)
        throw std::domain_error("monomial_coefficients_complex: m, n >= 0 required");
    if (const auto* mono = std::get_if<ComplexMonomialSeries>(&f)) {
        const auto it = mono->coeffs.entries.find({m, n});
        return it == mono->coeffs.entries.end() ? cplx(0.0, 0.0) : it->second.at(u);
    }
    if (const auto* disc = std::get_if<DiscSeries>(&f)) {
        const auto table = disc_to_monomial(disc->coeffs, disc->q);
        const auto it = table.entries.find({m, n});
        return it == table.entries.end() ? cplx(0.0, 0.0) : it->second.at(u);
    }
    const auto& opaque = std::get<ComplexOpaque>(f);
    if (m + n > opaque.smoothness_cap)
        throw std::invalid_argument("monomial_coefficients_complex: smoothness cap exceeded");
    if (m + n == 0) return opaque.eval(cplx(0.0, 0.0), u);
    const double h = 1e-2;
    const cplx d1 = wirtinger_difference(opaque, m, n, u, h);
    const cplx d2 = wirtinger_difference(opaque, m, n, u, 0.5 * h);
    const cplx d3 = wirtinger_difference(opaque, m, n, u, 0.25 * h);
    const cplx r1 = (4.0 * d2 - d1) / 3.0;
    const cplx r2 = (4.0 * d3 - d2) / 3.0;
    const cplx deriv = (16.0 * r2 - r1) / 15.0;
    return deriv / static_cast<double>(factorial_ll(m) * factorial_ll(n));
}

ComplexCoefficientTable dimension_walk(const ComplexCoefficientTable& coeffs, int q) {
    if (q < 2) throw std::domain_error("dimension_walk: q >= 2 required");
    ComplexCoefficientTable out;
    if (coeffs.entries.empty()) return out;
    const size_t order = coeffs.entries.begin()->second.values.size();
    const GroupFunction zero{std::vector<cplx>(order, cplx(0.0, 0.0))};
    auto lookup = [&](int m, int n) -> const GroupFunction& {
        const auto it = coeffs.entries.find({m, n});
        return it == coeffs.entries.end() ? zero : it->second;
    };

    // index set: every (m,n) whose walk image can be nonzero
    std::vector<std::pair<int, int>> targets;
    for (const auto& [mn, phi] : coeffs.entries) {
        targets.push_back(mn);
        if (mn.first >= 1 && mn.second >= 1) targets.push_back({mn.first - 1, mn.second - 1});
    }
    for (const auto& [m, n] : targets) {
        if (out.entries.count({m, n})) continue;
        const double A =
            (m + q - 1.0) * (n + q - 1.0) / ((q - 1.0) * (m + n + q - 1.0));
        const double B = (m + 1.0) * (n + 1.0) / ((q - 1.0) * (m + n + q + 1.0));
        GroupFunction walked{std::vector<cplx>(order, cplx(0.0, 0.0))};
        const auto& keep = lookup(m, n);
        const auto& shift = lookup(m + 1, n + 1);
        for (size_t u = 0; u < order; ++u)
            walked.values[u] = A * keep.at(static_cast<int>(u)) - B * shift.at(static_cast<int>(u));
        out.entries[{m, n}] = std::move(walked);
    }
    return out;
}

std::vector<InequalityViolation> coefficient_inequality_check(const ComplexCoefficientTable& coeffs,
                                                              int q, double tol) {
    std::vector<InequalityViolation> violations;
    const double scale = std::max(1.0, std::abs(coeffs.mass_at_identity()));
    auto identity_value = [&](int m, int n) {
        const auto it = coeffs.entries.find({m, n});
        return it == coeffs.entries.end() ? 0.0 : it->second.at(0).real();
    };
    std::vector<std::pair<int, int>> targets;
    for (const auto& [mn, phi] : coeffs.entries) {
        targets.push_back(mn);
        if (mn.first >= 1 && mn.second >= 1) targets.push_back({mn.first - 1, mn.second - 1});
    }
    for (const auto& [m, n] : targets) {
        const double ratio = (m + 1.0) * (n + 1.0) * (m + n + q - 1.0) /
                             ((m + q - 1.0) * (n + q - 1.0) * (m + n + q + 1.0));
        const double lhs = identity_value(m, n);
        const double rhs = ratio * identity_value(m + 1, n + 1);
        if (lhs < rhs - tol * scale) violations.push_back({m, n, lhs, rhs});
    }
    return violations;
}

ComplexKernelModel group_average(const ComplexKernelModel& f, const GroupSpec& g,
                                 const std::vector<int>& us, const std::vector<cplx>& cs) {
    if (us.empty() || us.size() != cs.size())
        throw std::invalid_argument("group_average: us and cs must be nonempty and equal length");
    for (int u : us)
        if (u < 0 || u >= g.order)
            throw std::invalid_argument("group_average: element out of range");

    auto average_table = [&](const ComplexCoefficientTable& in) {
        ComplexCoefficientTable out;
        for (const auto& [mn, phi] : in.entries) {
            cplx acc(0.0, 0.0);
            for (size_t j = 0; j < us.size(); ++j)
                for (size_t k = 0; k < us.size(); ++k)
                    acc += phi.at(g.op(g.inverse(us[j]), us[k])) * cs[j] * std::conj(cs[k]);
            out.entries[mn] = GroupFunction{{acc}};
        }
        return out;
    };

    if (const auto* disc = std::get_if<DiscSeries>(&f))
        return DiscSeries{disc->q, average_table(disc->coeffs)};
    if (const auto* mono = std::get_if<ComplexMonomialSeries>(&f))
        return ComplexMonomialSeries{average_table(mono->coeffs)};

    const auto opaque = std::get<ComplexOpaque>(f);
    ComplexOpaque out;
    out.smoothness_cap = opaque.smoothness_cap;
    out.eval = [opaque, g, us, cs](cplx z, int) {
        cplx acc(0.0, 0.0);
        for (size_t j = 0; j < us.size(); ++j)
            for (size_t k = 0; k < us.size(); ++k)
                acc += opaque.eval(z, g.op(g.inverse(us[j]), us[k])) * cs[j] * std::conj(cs[k]);
        return acc;
    };
    return out;
}

RecoveryResult recover_group_coefficients(const ComplexKernelModel& f, const GroupSpec& g, int u,
                                          int m, int n, double tol) {
    const cplx I(0.0, 1.0);
    const std::array<cplx, 3> cs{cplx(1.0, 0.0), cplx(-1.0, 0.0), I};
    RecoveryResult result;
    for (size_t i = 0; i < cs.size(); ++i) {
        const auto averaged = group_average(f, g, {0, u}, {cplx(1.0, 0.0), cs[i]});
        result.a[i] = monomial_coefficients_complex(averaged, m, n, 0);
        if (result.a[i].real() < -tol)
            throw std::domain_error(
                "recover_group_coefficients: negative averaged coefficient (kernel is not "
                "positive definite on the infinite-dimensional sphere)");
    }
    result.phi = (cplx(1.0, 0.0) - I) / 4.0 * result.a[0] -
                 (cplx(1.0, 0.0) + I) / 4.0 * result.a[1] + I / 2.0 * result.a[2];
    return result;
}

std::vector<LimitRow> limit_study_complex(const ComplexKernelModel& f, int m, int n,
                                          const std::vector<int>& q_list, int element,
                                          const GroupSpec& g) {
    std::vector<LimitRow> rows;
    rows.reserve(q_list.size());
    for (int q : q_list) {
        if (element >= 0) {
            const cplx v = extract_coefficient_complex(f, m, n, q, element);
            const cplx target = monomial_coefficients_complex(f, m, n, element);
            rows.push_back({q, element, v, std::abs(v - target)});
        } else {
            double worst = 0.0;
            cplx at_identity(0.0, 0.0);
            for (int u = 0; u < g.order; ++u) {
                const cplx v = extract_coefficient_complex(f, m, n, q, u);
                const cplx target = monomial_coefficients_complex(f, m, n, u);
                worst = std::max(worst, std::abs(v - target));
                if (u == 0) at_identity = v;
            }
            rows.push_back({q, 0, at_identity, worst});
        }
    }
    return rows;
}

std::vector<DiscLimitRow> disc_limit_diagnostic(int m, int n, const std::vector<double>& alphas,
                                                const std::vector<cplx>& grid) {
    for (const auto& z : grid)
        if (std::abs(z) >= 1.0)
            throw std::domain_error("disc_limit_diagnostic: grid must lie in the open disc");
    std::vector<DiscLimitRow> rows;
    rows.reserve(alphas.size());
    for (double alpha : alphas) {
        double sup = 0.0;
        for (const auto& z : grid) {
            cplx mono(1.0, 0.0);
            for (int p = 0; p < m; ++p) mono *= z;
            for (int p = 0; p < n; ++p) mono *= std::conj(z);
            sup = std::max(sup, std::abs(disc_polynomial(alpha, m, n, z) - mono));
        }
        rows.push_back({alpha, sup});
    }
    return rows;
}

} // namespace schoenberg
