#include "schoenberg/symdiff.hpp"

#include <cmath>
#include <stdexcept>

#include "schoenberg/specfun.hpp"

namespace schoenberg {

namespace {

void trim(std::vector<Rational>& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

void add_term(std::map<std::pair<int, int>, Rational>& m, int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    auto it = m.find({i, j});
    if (it == m.end()) {
        m.emplace(std::make_pair(i, j), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

} // namespace

double WeightedPolynomial::eval(double x) const {
    double acc = 0.0;
    for (int j = static_cast<int>(poly.size()) - 1; j >= 0; --j) acc = acc * x + poly[j].to_double();
    if (exponent.is_zero()) return acc;
    return acc * std::pow(1.0 - x * x, exponent.to_double());
}

WeightedPolynomial derivative(const WeightedPolynomial& w) {
    const int deg = static_cast<int>(w.poly.size()) - 1;
    if (w.exponent.is_zero()) {
        std::vector<Rational> dq(std::max(deg, 1), Rational(0));
        for (int j = 1; j <= deg; ++j) dq[j - 1] = w.poly[j] * Rational(j);
        trim(dq);
        return {dq, Rational(0)};
    }
    // (q'(x)(1-x^2) - 2 s x q(x)) (1-x^2)^{s-1}
    std::vector<Rational> out(deg + 2, Rational(0));
    for (int j = 1; j <= deg; ++j) {
        const Rational dc = w.poly[j] * Rational(j);
        out[j - 1] += dc;
        out[j + 1] -= dc;
    }
    const Rational two_s = w.exponent * 2;
    for (int j = 0; j <= deg; ++j) out[j + 1] -= two_s * w.poly[j];
    trim(out);
    return {out, w.exponent - Rational(1)};
}

std::complex<double> WeightedBiPolynomial::eval(std::complex<double> z) const {
    std::complex<double> acc(0.0, 0.0);
    const std::complex<double> zb = std::conj(z);
    for (const auto& [ij, c] : poly) {
        std::complex<double> t(c.to_double(), 0.0);
        for (int p = 0; p < ij.first; ++p) t *= z;
        for (int p = 0; p < ij.second; ++p) t *= zb;
        acc += t;
    }
    if (exponent.is_zero()) return acc;
    return acc * std::pow(1.0 - std::norm(z), exponent.to_double());
}

WeightedBiPolynomial wirtinger_z(const WeightedBiPolynomial& w) {
    std::map<std::pair<int, int>, Rational> out;
    // formal d/dz of p
    for (const auto& [ij, c] : w.poly)
        if (ij.first > 0) {
            const Rational dc = c * Rational(ij.first);
            if (w.exponent.is_zero()) {
                add_term(out, ij.first - 1, ij.second, dc);
            } else {
                // p_z (1 - z zbar)
                add_term(out, ij.first - 1, ij.second, dc);
                add_term(out, ij.first, ij.second + 1, -dc);
            }
        }
    if (w.exponent.is_zero()) return {out, Rational(0)};
    // - s zbar p
    for (const auto& [ij, c] : w.poly)
        add_term(out, ij.first, ij.second + 1, -(w.exponent * c));
    return {out, w.exponent - Rational(1)};
}

WeightedBiPolynomial wirtinger_zbar(const WeightedBiPolynomial& w) {
    std::map<std::pair<int, int>, Rational> out;
    for (const auto& [ij, c] : w.poly)
        if (ij.second > 0) {
            const Rational dc = c * Rational(ij.second);
            if (w.exponent.is_zero()) {
                add_term(out, ij.first, ij.second - 1, dc);
            } else {
                add_term(out, ij.first, ij.second - 1, dc);
                add_term(out, ij.first + 1, ij.second, -dc);
            }
        }
    if (w.exponent.is_zero()) return {out, Rational(0)};
    // - s z p
    for (const auto& [ij, c] : w.poly)
        add_term(out, ij.first + 1, ij.second, -(w.exponent * c));
    return {out, w.exponent - Rational(1)};
}

double rodrigues_check_real(int d, int n, const std::vector<double>& xs, int cap) {
    if (d < 1) throw std::domain_error("rodrigues_check_real: d >= 1 required");
    if (n > cap) throw std::invalid_argument("rodrigues_check_real: degree cap exceeded");
    // RHS: (-1)^n / (2^n (d/2)_n) (1-x^2)^{1-d/2} d^n/dx^n (1-x^2)^{n+d/2-1}
    WeightedPolynomial w{{Rational(1)}, Rational(2 * n + d - 2, 2)};
    for (int k = 0; k < n; ++k) w = derivative(w);
    if (w.exponent != Rational(d - 2, 2))
        throw std::logic_error("rodrigues_check_real: exponent bookkeeping failed");
    Rational pref = Rational(n % 2 == 0 ? 1 : -1) / Rational::pochhammer(Rational(d, 2), n);
    for (int k = 0; k < n; ++k) pref /= Rational(2);
    // the (1-x^2)^{1-d/2} factor cancels the remaining weight exactly
    WeightedPolynomial rhs{w.poly, Rational(0)};
    for (auto& c : rhs.poly) c *= pref;
    double worst = 0.0;
    for (double x : xs) {
        if (std::abs(x) >= 1.0)
            throw std::invalid_argument("rodrigues_check_real: samples must lie in (-1, 1)");
        worst = std::max(worst, std::abs(rhs.eval(x) - gegenbauer_normalized(d, n, x)));
    }
    return worst;
}

double rodrigues_check_complex(int q, int m, int n, const std::vector<std::complex<double>>& zs,
                               int cap) {
    if (q < 2) throw std::domain_error("rodrigues_check_complex: q >= 2 required");
    if (m + n > cap) throw std::invalid_argument("rodrigues_check_complex: degree cap exceeded");
    // RHS: (-1)^{m+n} (q-2)!/(m+n+q-2)! d^{m+n}/dzbar^m dz^n (1-|z|^2)^{m+n+q-2},
    // then divided by (1-|z|^2)^{q-2}.
    WeightedBiPolynomial w{{{{0, 0}, Rational(1)}}, Rational(m + n + q - 2)};
    for (int k = 0; k < n; ++k) w = wirtinger_z(w);
    for (int k = 0; k < m; ++k) w = wirtinger_zbar(w);
    if (w.exponent != Rational(q - 2))
        throw std::logic_error("rodrigues_check_complex: exponent bookkeeping failed");
    // (q-2)!/(m+n+q-2)! = 1/(q-1)_{m+n}
    Rational pref =
        Rational((m + n) % 2 == 0 ? 1 : -1) / Rational::pochhammer(Rational(q - 1), m + n);
    WeightedBiPolynomial rhs{w.poly, Rational(0)};
    for (auto& [ij, c] : rhs.poly) c *= pref;
    double worst = 0.0;
    for (const auto& z : zs) {
        if (std::norm(z) >= 1.0)
            throw std::invalid_argument("rodrigues_check_complex: samples must satisfy |z| < 1");
        worst = std::max(worst, std::abs(rhs.eval(z) - disc_polynomial(q - 2.0, m, n, z)));
    }
    return worst;
}

} // namespace schoenberg
