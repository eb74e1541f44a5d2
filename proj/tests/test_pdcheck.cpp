#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "schoenberg/pdcheck.hpp"

using namespace schoenberg;
using schoenberg::testing::random_pd_function;
using cplx = std::complex<double>;

namespace {

GroupFunction constant_one(int order) {
    return {std::vector<cplx>(order, cplx(1.0, 0.0))};
}

} // namespace

TEST_CASE("sampling is deterministic and normalized") {
    const auto a = sample_sphere_real(1, 3, 99);
    const auto b = sample_sphere_real(1, 3, 99);
    REQUIRE(a.real_pts.size() == 3);
    CHECK(a.real_pts == b.real_pts);
    for (const auto& p : a.real_pts) {
        double n2 = 0.0;
        for (double x : p) n2 += x * x;
        CHECK(n2 == doctest::Approx(1.0).epsilon(1e-12));
    }

    const auto c = sample_sphere_complex(2, 5, 7);
    const auto d = sample_sphere_complex(2, 5, 7);
    CHECK(c.complex_pts == d.complex_pts);
    for (const auto& p : c.complex_pts) {
        double n2 = 0.0;
        for (const auto& z : p) n2 += std::norm(z);
        CHECK(n2 == doctest::Approx(1.0).epsilon(1e-12));
        // Cauchy-Schwarz across pairs
        for (const auto& q : c.complex_pts) {
            cplx dot(0.0, 0.0);
            for (size_t k = 0; k < p.size(); ++k) dot += p[k] * std::conj(q[k]);
            CHECK(std::abs(dot) <= 1.0 + 1e-12);
        }
    }

    const auto e = sample_sphere_real(1, 3, 100);
    CHECK(a.real_pts != e.real_pts);
}

TEST_CASE("scalar product kernel is positive definite, its negative is not") {
    const auto trivial = make_cyclic(1);
    const auto pts = sample_sphere_real(2, 12, 2024);

    RealMonomialSeries id_kernel;
    id_kernel.coeffs.entries[1] = constant_one(1);
    CHECK(gram_check(RealKernelModel{id_kernel}, pts, trivial).verdict == PdKind::pd);

    RealMonomialSeries neg;
    neg.coeffs.entries[1] = {{cplx(-1.0, 0.0)}};
    const auto report = gram_check(RealKernelModel{neg}, pts, trivial);
    REQUIRE(report.verdict == PdKind::not_pd);
    // witness soundness: quadratic form re-evaluates negative
    CHECK(report.witness_quadform < -1e-8 * std::abs(report.trace));
}

TEST_CASE("schur product kernels on the complex sphere") {
    const auto z4 = make_cyclic(4);
    const auto pts = sample_sphere_complex(3, 8, 5);
    // f(z, u) = z^2 conj(z) ... z^m conj(z)^n times a character is pd
    for (int m : {0, 1, 2})
        for (int n : {0, 1}) {
            ComplexMonomialSeries f;
            GroupFunction chi;
            for (int u = 0; u < 4; ++u) chi.values.push_back(std::polar(1.0, 2 * M_PI * u / 4.0));
            f.coeffs.entries[{m, n}] = chi;
            const auto report = gram_check(ComplexKernelModel{f}, pts, z4);
            CHECK(report.verdict == PdKind::pd);
        }
}

TEST_CASE("pd coefficient tables give pd kernels, 50 configurations per dimension") {
    std::mt19937_64 rng(77);
    const std::vector<GroupSpec> groups = {make_cyclic(1), make_cyclic(3),
                                           make_product(make_cyclic(2), make_cyclic(2))};
    std::uniform_int_distribution<int> upts(4, 8), ugrp(0, 2), un(0, 5);
    for (int d = 1; d <= 6; ++d) {
        for (int rep = 0; rep < 50; ++rep) {
            const auto& g = groups[ugrp(rng)];
            GegenbauerSeries f;
            f.d = d;
            for (int t = 0; t < 3; ++t) f.coeffs.entries[un(rng)] = random_pd_function(g, rng);
            const auto pts = sample_sphere_real(d, upts(rng), 31 * d + rep);
            const auto report = gram_check(RealKernelModel{f}, pts, g);
            CHECK(report.verdict == PdKind::pd);
        }
    }
    for (int q = 2; q <= 6; ++q) {
        for (int rep = 0; rep < 50; ++rep) {
            const auto& g = groups[ugrp(rng)];
            DiscSeries f;
            f.q = q;
            // pd coefficient functions are hermitian-symmetric, which is all
            // the kernel symmetry conj f(z,u) = f(conj z, u^{-1}) needs
            std::uniform_int_distribution<int> um(0, 3);
            for (int t = 0; t < 3; ++t)
                f.coeffs.entries[{um(rng), um(rng)}] = random_pd_function(g, rng);
            const auto pts = sample_sphere_complex(q, upts(rng), 41 * q + rep);
            const auto report = gram_check(ComplexKernelModel{f}, pts, g);
            CHECK(report.verdict == PdKind::pd);
        }
    }
}

TEST_CASE("non-hermitian kernels are reported distinctly") {
    const auto trivial = make_cyclic(1);
    ComplexOpaque f;
    f.eval = [](cplx z, int) { return z + cplx(0.0, 0.3); }; // violates conj f(z) = f(conj z)
    const auto pts = sample_sphere_complex(2, 6, 13);
    CHECK(gram_check(ComplexKernelModel{f}, pts, trivial).verdict == PdKind::non_hermitian);
}

TEST_CASE("equator restriction reproduces the lower-dimensional verdict") {
    const auto trivial = make_cyclic(1);
    // embed S^1 samples as the equator of S^2
    const auto low = sample_sphere_real(1, 9, 555);
    SpherePointSet embedded = low;
    embedded.dim = 2;
    for (auto& p : embedded.real_pts) p.push_back(0.0);

    RealMonomialSeries f; // f(x) = 0.3 + x^2 is pd on every sphere
    f.coeffs.entries[0] = {{cplx(0.3, 0.0)}};
    f.coeffs.entries[2] = constant_one(1);
    const auto v_low = gram_check(RealKernelModel{f}, low, trivial).verdict;
    const auto v_emb = gram_check(RealKernelModel{f}, embedded, trivial).verdict;
    CHECK(v_low == v_emb);

    RealMonomialSeries bad; // f(x) = x^3 - 0.4 fails on both
    bad.coeffs.entries[3] = constant_one(1);
    bad.coeffs.entries[0] = {{cplx(-0.4, 0.0)}};
    CHECK(gram_check(RealKernelModel{bad}, low, trivial).verdict == PdKind::not_pd);
    CHECK(gram_check(RealKernelModel{bad}, embedded, trivial).verdict == PdKind::not_pd);
}

TEST_CASE("size cap is enforced") {
    const auto g = make_cyclic(64);
    const auto pts = sample_sphere_real(2, 10, 3);
    RealMonomialSeries f;
    f.coeffs.entries[1] = constant_one(64);
    CHECK_THROWS_AS(gram_check(RealKernelModel{f}, pts, g), std::invalid_argument);
}
