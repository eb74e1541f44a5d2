#include "schoenberg/pdcheck.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "schoenberg/psd.hpp"

namespace schoenberg {

using cplx = std::complex<double>;

namespace {

// Box-Muller on explicitly constructed (0,1) uniforms; mt19937_64 output is
// fully specified, so the stream is reproducible across platforms.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        have_spare_ = true;
        spare_ = r * std::sin(2.0 * M_PI * u2);
        return r * std::cos(2.0 * M_PI * u2);
    }

  private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;

    double uniform01() { return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53; }
};

double clamp_unit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

cplx clamp_disc(cplx z) {
    const double r = std::abs(z);
    return r > 1.0 ? z / r : z;
}

std::vector<int> resolve_subset(const GroupSpec& g, const std::vector<int>& subset) {
    if (subset.empty()) {
        std::vector<int> all(g.order);
        for (int i = 0; i < g.order; ++i) all[i] = i;
        return all;
    }
    for (int u : subset)
        if (u < 0 || u >= g.order)
            throw std::invalid_argument("gram_check: group_subset element out of range");
    return subset;
}

template <typename EntryFn>
GramReport run_gram(std::size_t points, const std::vector<int>& elems, const GroupSpec& g,
                    double tol, std::size_t max_size, EntryFn entry) {
    const std::size_t n = points * elems.size();
    if (n == 0) throw std::invalid_argument("gram_check: empty index set");
    if (n > max_size)
        throw std::invalid_argument("gram_check: product set size " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(max_size));

    auto assemble = [&] {
        std::vector<cplx> M(n * n);
        for (std::size_t i = 0; i < points; ++i)
            for (std::size_t a = 0; a < elems.size(); ++a)
                for (std::size_t j = 0; j < points; ++j)
                    for (std::size_t b = 0; b < elems.size(); ++b) {
                        const int gu = g.op(g.inverse(elems[a]), elems[b]);
                        M[(i * elems.size() + a) * n + (j * elems.size() + b)] = entry(i, j, gu);
                    }
        return M;
    };
    const auto M = assemble();

    GramReport report;
    report.size = static_cast<int>(n);
    double scale = 0.0;
    for (const auto& e : M) scale = std::max(scale, std::abs(e));
    const double defect = hermitian_defect(M, static_cast<int>(n));
    if (defect > tol * std::max(scale, 1.0)) {
        report.verdict = PdKind::non_hermitian;
        report.hermitian_defect = defect;
        return report;
    }

    const auto psd = hermitian_min_eigen(M, static_cast<int>(n));
    report.min_eigenvalue = psd.min_eigenvalue;
    report.trace = psd.trace;
    if (psd.min_eigenvalue >= -tol * std::abs(psd.trace)) {
        report.verdict = PdKind::pd;
        return report;
    }
    report.verdict = PdKind::not_pd;
    report.witness = psd.min_vector;
    // Witness soundness: evaluate the quadratic form on freshly assembled
    // entries rather than trusting the eigensolver's factorization.
    report.witness_quadform = quadratic_form(assemble(), static_cast<int>(n), psd.min_vector);
    return report;
}

} // namespace

SpherePointSet sample_sphere_real(int d, int count, std::uint64_t seed) {
    if (d < 1) throw std::domain_error("sample_sphere_real: d >= 1 required");
    if (count < 1) throw std::domain_error("sample_sphere_real: count >= 1 required");
    GaussianStream gauss(seed);
    SpherePointSet pts;
    pts.complex_space = false;
    pts.dim = d;
    pts.seed = seed;
    pts.real_pts.reserve(count);
    while (static_cast<int>(pts.real_pts.size()) < count) {
        std::vector<double> v(d + 1);
        double norm2 = 0.0;
        for (auto& x : v) {
            x = gauss.next();
            norm2 += x * x;
        }
        if (norm2 < 1e-16) continue;
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& x : v) x *= inv;
        pts.real_pts.push_back(std::move(v));
    }
    return pts;
}

SpherePointSet sample_sphere_complex(int q, int count, std::uint64_t seed) {
    if (q < 2) throw std::domain_error("sample_sphere_complex: q >= 2 required");
    if (count < 1) throw std::domain_error("sample_sphere_complex: count >= 1 required");
    GaussianStream gauss(seed);
    SpherePointSet pts;
    pts.complex_space = true;
    pts.dim = q;
    pts.seed = seed;
    pts.complex_pts.reserve(count);
    while (static_cast<int>(pts.complex_pts.size()) < count) {
        std::vector<cplx> v(q);
        double norm2 = 0.0;
        for (auto& z : v) {
            const double re = gauss.next();
            const double im = gauss.next();
            z = {re, im};
            norm2 += std::norm(z);
        }
        if (norm2 < 1e-16) continue;
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& z : v) z *= inv;
        pts.complex_pts.push_back(std::move(v));
    }
    return pts;
}

GramReport gram_check(const RealKernelModel& f, const SpherePointSet& pts, const GroupSpec& g,
                      const std::vector<int>& group_subset, double tol, std::size_t max_size) {
    if (pts.complex_space)
        throw std::invalid_argument("gram_check: real kernel requires real sphere points");
    const auto elems = resolve_subset(g, group_subset);
    // scalar products, clamped against rounding excursions beyond [-1,1]
    const std::size_t N = pts.real_pts.size();
    std::vector<double> dots(N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < pts.real_pts[i].size(); ++k)
                s += pts.real_pts[i][k] * pts.real_pts[j][k];
            dots[i * N + j] = clamp_unit(s);
        }
    return run_gram(N, elems, g, tol, max_size,
                    [&](std::size_t i, std::size_t j, int gu) { return evaluate(f, dots[i * N + j], gu); });
}

GramReport gram_check(const ComplexKernelModel& f, const SpherePointSet& pts, const GroupSpec& g,
                      const std::vector<int>& group_subset, double tol, std::size_t max_size) {
    if (!pts.complex_space)
        throw std::invalid_argument("gram_check: complex kernel requires complex sphere points");
    const auto elems = resolve_subset(g, group_subset);
    const std::size_t N = pts.complex_pts.size();
    std::vector<cplx> dots(N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            cplx s(0.0, 0.0);
            for (std::size_t k = 0; k < pts.complex_pts[i].size(); ++k)
                s += pts.complex_pts[i][k] * std::conj(pts.complex_pts[j][k]);
            dots[i * N + j] = clamp_disc(s);
        }
    return run_gram(N, elems, g, tol, max_size,
                    [&](std::size_t i, std::size_t j, int gu) { return evaluate(f, dots[i * N + j], gu); });
}

} // namespace schoenberg
