#include "schoenberg/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace schoenberg {

namespace {

constexpr double kDomainSlack = 1e-10;

double clamp_unit(double x, const char* what) {
    if (std::abs(x) > 1.0 + kDomainSlack)
        throw std::domain_error(std::string(what) + ": argument outside [-1, 1]");
    return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x);
}

__int128 binomial_exact(int a, int b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    __int128 r = 1;
    for (int i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i; // exact: r is binom(a-b+i, i) after each step
    }
    return r;
}

long long checked_narrow(__int128 v, const char* what) {
    if (v > static_cast<__int128>(std::numeric_limits<long long>::max()))
        throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
    return static_cast<long long>(v);
}

cplx ipow(cplx z, int k) {
    cplx r(1.0, 0.0);
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

} // namespace

double pochhammer(double a, int k) {
    if (k < 0) throw std::domain_error("pochhammer: negative order");
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= a + i;
    return r;
}

double beta_function(double a, double b) {
    if (a <= 0.0 || b <= 0.0) throw std::domain_error("beta_function: nonpositive argument");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double surface_mass(int d) {
    if (d < 1) throw std::domain_error("surface_mass: d >= 1 required");
    const double h = 0.5 * (d + 1);
    return std::exp(std::log(2.0) + h * std::log(M_PI) - std::lgamma(h));
}

long long harmonic_dim_real(int d, int n) {
    if (d < 1 || n < 0) throw std::domain_error("harmonic_dim_real: d >= 1, n >= 0 required");
    if (n == 0) return 1;
    // N_n(d) = binom(n+d, n) - binom(n+d-2, n-2)
    const __int128 v = binomial_exact(n + d, n) - binomial_exact(n + d - 2, n - 2);
    return checked_narrow(v, "harmonic_dim_real");
}

long long harmonic_dim_complex(int q, int m, int n) {
    if (q < 2 || m < 0 || n < 0)
        throw std::domain_error("harmonic_dim_complex: q >= 2, m, n >= 0 required");
    __int128 num = binomial_exact(m + q - 2, m) * binomial_exact(n + q - 2, n);
    num *= (m + n + q - 1);
    if (num % (q - 1) != 0)
        throw std::logic_error("harmonic_dim_complex: non-integer dimension");
    return checked_narrow(num / (q - 1), "harmonic_dim_complex");
}

double harmonic_dim_real_approx(int d, int n) {
    if (n == 0) return 1.0;
    const __int128 v = binomial_exact(n + d, n) - binomial_exact(n + d - 2, n - 2);
    if (v <= static_cast<__int128>(std::numeric_limits<long long>::max()))
        return static_cast<double>(v);
    // (d)_{n-1} (d+2n-1) / n!
    return std::exp(std::lgamma(d + n - 1.0) - std::lgamma(static_cast<double>(d)) -
                    std::lgamma(n + 1.0)) *
           (d + 2.0 * n - 1.0);
}

double gegenbauer_normalized(int d, int n, double x) {
    if (d < 1) throw std::domain_error("gegenbauer_normalized: d >= 1 required");
    if (n < 0) throw std::domain_error("gegenbauer_normalized: n >= 0 required");
    x = clamp_unit(x, "gegenbauer_normalized");
    if (n == 0) return 1.0;
    if (n == 1) return x;
    double prev = 1.0, cur = x;
    if (d == 1) {
        // Chebyshev T_n; C_n^{(0)} degenerates so the normalized quotient
        // is taken as its lambda -> 0 limit.
        for (int k = 2; k <= n; ++k) {
            const double next = 2.0 * x * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // Recurrence for c_k = C_k^{(lambda)} / C_k^{(lambda)}(1), lambda = (d-1)/2:
    //   c_k = ((2k+d-3) x c_{k-1} - (k-1) c_{k-2}) / (k+d-2)
    for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k + d - 3.0) * x * cur - (k - 1.0) * prev) / (k + d - 2.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double jacobi_normalized(double a, double b, int k, double x) {
    if (a <= -1.0 || b <= -1.0)
        throw std::domain_error("jacobi_normalized: alpha, beta > -1 required");
    if (k < 0) throw std::domain_error("jacobi_normalized: k >= 0 required");
    x = clamp_unit(x, "jacobi_normalized");
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = ((a + b + 2.0) * x + a - b) / (2.0 * (a + 1.0));
    for (int j = 2; j <= k; ++j) {
        const double s = 2.0 * j + a + b;
        const double num1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        const double num2 = 2.0 * (j - 1.0) * (j + b - 1.0) * s;
        const double den = 2.0 * (j + a + b) * (s - 2.0) * (a + j);
        const double next = (num1 * cur - num2 * prev) / den;
        prev = cur;
        cur = next;
    }
    return cur;
}

cplx disc_polynomial(double alpha, int m, int n, cplx z) {
    if (alpha <= -1.0) throw std::domain_error("disc_polynomial: alpha > -1 required");
    if (m < 0 || n < 0) throw std::domain_error("disc_polynomial: m, n >= 0 required");
    const double r2 = std::norm(z);
    if (r2 > 1.0 + kDomainSlack) throw std::domain_error("disc_polynomial: |z| > 1");
    const double t = clamp_unit(2.0 * r2 - 1.0, "disc_polynomial");
    const int diff = m - n;
    const cplx angular = diff >= 0 ? ipow(z, diff) : ipow(std::conj(z), -diff);
    return angular * jacobi_normalized(alpha, std::abs(diff), std::min(m, n), t);
}

std::vector<Rational> gegenbauer_monomial(int d, int n) {
    if (d < 1 || n < 0) throw std::domain_error("gegenbauer_monomial: d >= 1, n >= 0 required");
    std::vector<Rational> prev{Rational(1)};
    if (n == 0) return prev;
    std::vector<Rational> cur{Rational(0), Rational(1)}; // x
    for (int k = 2; k <= n; ++k) {
        // same recurrence as the double path, kept exact
        std::vector<Rational> next(k + 1, Rational(0));
        const Rational a(2 * k + d - 3, k + d - 2);
        const Rational b(k - 1, k + d - 2);
        for (int j = 0; j < static_cast<int>(cur.size()); ++j)
            next[j + 1] += a * cur[j];
        for (int j = 0; j < static_cast<int>(prev.size()); ++j)
            next[j] -= b * prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Rational> jacobi_monomial(const Rational& a, const Rational& b, int k) {
    std::vector<Rational> prev{Rational(1)};
    if (k == 0) return prev;
    const Rational two(2);
    std::vector<Rational> cur{(a - b) / (two * (a + Rational(1))),
                              (a + b + Rational(2)) / (two * (a + Rational(1)))};
    for (int j = 2; j <= k; ++j) {
        const Rational s = Rational(2 * j) + a + b;
        const Rational c1 = (s - Rational(1)) * s * (s - Rational(2));
        const Rational c0 = (s - Rational(1)) * (a * a - b * b);
        const Rational c2 = two * Rational(j - 1) * (Rational(j - 1) + b) * s;
        const Rational den = two * (Rational(j) + a + b) * (s - Rational(2)) * (a + Rational(j));
        std::vector<Rational> next(j + 1, Rational(0));
        for (int i = 0; i < static_cast<int>(cur.size()); ++i) {
            next[i + 1] += c1 / den * cur[i];
            next[i] += c0 / den * cur[i];
        }
        for (int i = 0; i < static_cast<int>(prev.size()); ++i)
            next[i] -= c2 / den * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::map<std::pair<int, int>, Rational> disc_monomial(const Rational& alpha, int m, int n) {
    const int k = std::min(m, n);
    const int b = std::abs(m - n);
    const auto jac = jacobi_monomial(alpha, Rational(b), k); // in t = 2 z zbar - 1
    // (2u - 1)^j expanded in u = z zbar: coefficient of u^i
    std::vector<Rational> radial(k + 1, Rational(0));
    for (int j = 0; j < static_cast<int>(jac.size()); ++j) {
        Rational binom(1);
        for (int i = 0; i <= j; ++i) {
            // binom(j, i) 2^i (-1)^{j-i}
            Rational term = binom;
            for (int p = 0; p < i; ++p) term *= Rational(2);
            if ((j - i) % 2 != 0) term = -term;
            radial[i] += jac[j] * term;
            binom = binom * Rational(j - i) / Rational(i + 1);
        }
    }
    std::map<std::pair<int, int>, Rational> out;
    for (int i = 0; i <= k; ++i) {
        if (radial[i].is_zero()) continue;
        const int zi = i + (m >= n ? m - n : 0);
        const int zj = i + (m >= n ? 0 : n - m);
        out[{zi, zj}] = radial[i];
    }
    return out;
}

} // namespace schoenberg
