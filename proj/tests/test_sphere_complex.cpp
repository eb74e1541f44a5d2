#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "schoenberg/pdcheck.hpp"
#include "schoenberg/specfun.hpp"
#include "schoenberg/sphere_complex.hpp"

using namespace schoenberg;
using schoenberg::testing::random_pd_function;
using cplx = std::complex<double>;

namespace {

GroupFunction scalar(cplx v) { return {{v}}; }

ComplexMonomialSeries zzbar() {
    ComplexMonomialSeries f;
    f.coeffs.entries[{1, 1}] = scalar(1.0);
    return f;
}

// random finitely supported model with pd coefficient functions
DiscSeries random_pd_disc(const GroupSpec& g, std::mt19937_64& rng, int q, int max_total) {
    DiscSeries f;
    f.q = q;
    std::uniform_int_distribution<int> ui(0, max_total);
    for (int t = 0; t < 4; ++t) {
        const int m = ui(rng);
        std::uniform_int_distribution<int> un(0, max_total - m);
        f.coeffs.entries[{m, un(rng)}] = random_pd_function(g, rng);
    }
    return f;
}

} // namespace

TEST_CASE("extraction closed forms for |z|^2, z and 1") {
    const ComplexKernelModel f{zzbar()};
    for (int q = 2; q <= 12; ++q) {
        CHECK(std::abs(extract_coefficient_complex(f, 0, 0, q, 0) - 1.0 / q) < 1e-12);
        CHECK(std::abs(extract_coefficient_complex(f, 1, 1, q, 0) - (q - 1.0) / q) < 1e-12);
        CHECK(std::abs(extract_coefficient_complex(f, 1, 0, q, 0)) < 1e-12);
    }

    ComplexMonomialSeries fz;
    fz.coeffs.entries[{1, 0}] = scalar(1.0);
    const ComplexKernelModel z_model{fz};
    for (int q : {2, 5, 9}) {
        CHECK(std::abs(extract_coefficient_complex(z_model, 1, 0, q, 0) - 1.0) < 1e-12);
        CHECK(std::abs(extract_coefficient_complex(z_model, 0, 1, q, 0)) < 1e-12);
        CHECK(std::abs(extract_coefficient_complex(z_model, 0, 0, q, 0)) < 1e-12);
    }

    ComplexMonomialSeries one;
    one.coeffs.entries[{0, 0}] = scalar(1.0);
    CHECK(std::abs(extract_coefficient_complex(ComplexKernelModel{one}, 0, 0, 4, 0) - 1.0) <
          1e-13);
}

TEST_CASE("series evaluation closed forms") {
    ComplexCoefficientTable t;
    t.entries[{0, 0}] = scalar(1.0);
    CHECK(std::abs(evaluate_series_complex(t, 3, cplx(0.2, -0.4), 0) - 1.0) < 1e-15);

    ComplexCoefficientTable tz;
    tz.entries[{1, 0}] = scalar(1.0);
    const cplx z(0.3, 0.55);
    CHECK(std::abs(evaluate_series_complex(tz, 6, z, 0) - z) < 1e-15);

    for (int q : {2, 4, 9}) {
        ComplexCoefficientTable tz2;
        tz2.entries[{0, 0}] = scalar(1.0 / q);
        tz2.entries[{1, 1}] = scalar((q - 1.0) / q);
        CHECK(std::abs(evaluate_series_complex(tz2, q, z, 0) - std::norm(z)) < 1e-14);
    }
}

TEST_CASE("roundtrip extract after evaluate on random tables") {
    std::mt19937_64 rng(201);
    const auto g = make_cyclic(3);
    for (int q : {2, 3, 7, 12}) {
        const auto f = random_pd_disc(g, rng, q, 8);
        const ComplexKernelModel model{f};
        for (int m = 0; m <= 8; ++m)
            for (int n = 0; m + n <= 8; ++n) {
                const auto it = f.coeffs.entries.find({m, n});
                for (int u = 0; u < g.order; ++u) {
                    const cplx want =
                        it == f.coeffs.entries.end() ? cplx(0, 0) : it->second.at(u);
                    const cplx got = extract_coefficient_complex(model, m, n, q, u);
                    CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
                }
            }
        CHECK(f.coeffs.mass_at_identity() ==
              doctest::Approx(evaluate(model, cplx(1.0, 0.0), 0).real()).epsilon(1e-12));
    }
}

TEST_CASE("extracted coefficients of pd models pass the group pd check") {
    std::mt19937_64 rng(209);
    const auto g = make_cyclic(4);
    const auto f = random_pd_disc(g, rng, 4, 4);
    const ComplexKernelModel model{f};
    const double mass = f.coeffs.mass_at_identity();
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n) {
            GroupFunction phi;
            double scale = 0.0;
            for (int u = 0; u < g.order; ++u) {
                phi.values.push_back(extract_coefficient_complex(model, m, n, 4, u));
                scale = std::max(scale, std::abs(phi.values.back()));
            }
            if (scale <= 1e-10 * (1.0 + mass)) continue;
            CHECK(pd_check_group(phi, g, 1e-8).ok());
        }
}

TEST_CASE("coefficient functions of symmetric models are hermitian-symmetric") {
    // conj f(z,u) = f(conj z, u^{-1}) forces phi_{m,n}(u^{-1}) = conj(phi_{m,n}(u))
    std::mt19937_64 rng(211);
    const auto g = make_cyclic(4);
    const auto f = random_pd_disc(g, rng, 3, 5);
    const ComplexKernelModel model{f};
    for (const auto& [mn, phi] : f.coeffs.entries) {
        for (int u = 0; u < g.order; ++u) {
            const cplx a = extract_coefficient_complex(model, mn.first, mn.second, 3, g.inverse(u));
            const cplx b = extract_coefficient_complex(model, mn.first, mn.second, 3, u);
            CHECK(std::abs(a - std::conj(b)) < 1e-11);
        }
    }
}

TEST_CASE("disc_to_monomial closed forms") {
    const auto g = make_cyclic(2);
    std::mt19937_64 rng(221);
    const auto phi = random_pd_function(g, rng);

    ComplexCoefficientTable t;
    t.entries[{1, 0}] = phi;
    for (int q : {2, 5}) {
        const auto mono = disc_to_monomial(t, q);
        REQUIRE(mono.entries.size() == 1);
        CHECK(std::abs(mono.entries.at({1, 0}).at(1) - phi.at(1)) < 1e-15);
    }

    ComplexCoefficientTable t11;
    t11.entries[{1, 1}] = phi;
    for (int q : {2, 3, 8}) {
        const auto mono = disc_to_monomial(t11, q);
        CHECK(std::abs(mono.entries.at({0, 0}).at(0) + phi.at(0) / (q - 1.0)) < 1e-14);
        CHECK(std::abs(mono.entries.at({1, 1}).at(0) - phi.at(0) * (q / (q - 1.0))) < 1e-14);
    }
}

TEST_CASE("monomial coefficients across model kinds") {
    CHECK(monomial_coefficients_complex(ComplexKernelModel{zzbar()}, 1, 1, 0).real() ==
          doctest::Approx(1.0));
    CHECK(std::abs(monomial_coefficients_complex(ComplexKernelModel{zzbar()}, 0, 0, 0)) == 0.0);

    // disc series path: {(1,1): 1} at level q
    DiscSeries d11;
    d11.q = 5;
    d11.coeffs.entries[{1, 1}] = scalar(1.0);
    const ComplexKernelModel model{d11};
    CHECK(monomial_coefficients_complex(model, 0, 0, 0).real() == doctest::Approx(-0.25));
    CHECK(monomial_coefficients_complex(model, 1, 1, 0).real() == doctest::Approx(1.25));

    // opaque path: f(z) = |z|^2 + z^2
    ComplexOpaque op;
    op.eval = [](cplx z, int) { return std::norm(z) + z * z; };
    op.smoothness_cap = 4;
    const ComplexKernelModel opaque{op};
    CHECK(std::abs(monomial_coefficients_complex(opaque, 1, 1, 0) - 1.0) < 1e-8);
    CHECK(std::abs(monomial_coefficients_complex(opaque, 2, 0, 0) - 1.0) < 1e-8);
    CHECK(std::abs(monomial_coefficients_complex(opaque, 1, 0, 0)) < 1e-9);
    CHECK_THROWS_AS(monomial_coefficients_complex(opaque, 3, 2, 0), std::invalid_argument);
}

TEST_CASE("dimension walk closed forms") {
    // |z|^2: (0,0) walks from 1/q to 1/(q+1)
    for (int q : {2, 3, 7, 10}) {
        ComplexCoefficientTable t;
        t.entries[{0, 0}] = scalar(1.0 / q);
        t.entries[{1, 1}] = scalar((q - 1.0) / q);
        const auto walked = dimension_walk(t, q);
        CHECK(std::abs(walked.entries.at({0, 0}).at(0) - 1.0 / (q + 1.0)) < 1e-14);
        CHECK(std::abs(walked.entries.at({1, 1}).at(0) - q / (q + 1.0)) < 1e-14);
    }

    // constants are level-independent
    ComplexCoefficientTable c;
    c.entries[{0, 0}] = scalar(1.0);
    CHECK(std::abs(dimension_walk(c, 5).entries.at({0, 0}).at(0) - 1.0) < 1e-15);

    // f = z: (1,0) stays 1
    ComplexCoefficientTable tz;
    tz.entries[{1, 0}] = scalar(1.0);
    CHECK(std::abs(dimension_walk(tz, 4).entries.at({1, 0}).at(0) - 1.0) < 1e-15);
}

TEST_CASE("dimension walk agrees with direct extraction at q+1") {
    std::mt19937_64 rng(231);
    const auto g = make_cyclic(3);
    std::uniform_int_distribution<int> uq(2, 10);
    for (int rep = 0; rep < 20; ++rep) {
        const int q = uq(rng);
        const auto f = random_pd_disc(g, rng, q, 6);
        // interpret the same table at level q, walk it, and compare against
        // extraction of the model at level q+1
        const auto walked = dimension_walk(f.coeffs, q);
        const ComplexKernelModel model{f};
        for (const auto& [mn, want] : walked.entries)
            for (int u = 0; u < g.order; ++u) {
                const cplx got =
                    extract_coefficient_complex(model, mn.first, mn.second, q + 1, u);
                CHECK(std::abs(got - want.at(u)) <= 1e-10 * std::max(1.0, std::abs(want.at(u))));
            }
    }
}

TEST_CASE("coefficient inequality check") {
    // |z|^2 at level q: phi_{0,0} = 1/q >= 1/(q(q+1)) -- no violations
    for (int q : {2, 5, 9}) {
        ComplexCoefficientTable t;
        t.entries[{0, 0}] = scalar(1.0 / q);
        t.entries[{1, 1}] = scalar((q - 1.0) / q);
        CHECK(coefficient_inequality_check(t, q).empty());
    }

    // synthetic violation: mass at (1,1) with no (0,0) mass
    ComplexCoefficientTable bad;
    bad.entries[{1, 1}] = scalar(1.0);
    const auto violations = coefficient_inequality_check(bad, 3);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].m == 0);
    CHECK(violations[0].n == 0);
    CHECK(violations[0].lhs == 0.0);
    CHECK(violations[0].rhs > 0.0);
}

TEST_CASE("group averaging") {
    const auto z2 = make_cyclic(2);
    // f(z,u) = z zbar phi(u), phi = (1, 1/2)
    ComplexMonomialSeries f;
    f.coeffs.entries[{1, 1}] = GroupFunction{{cplx(1.0, 0.0), cplx(0.5, 0.0)}};
    const ComplexKernelModel model{f};

    // single (u, 1): F = f(., e)
    const auto single = group_average(model, z2, {1}, {cplx(1.0, 0.0)});
    CHECK(std::abs(evaluate(single, cplx(0.5, 0.2), 0) -
                   evaluate(model, cplx(0.5, 0.2), 0)) < 1e-15);

    // (e, u) with (1, c): F = f(z,e)(1+|c|^2) + f(z,u) conj(c) + f(z,u^{-1}) c
    std::mt19937_64 rng(241);
    std::uniform_real_distribution<double> ur(-1.0, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        const cplx c(ur(rng), ur(rng));
        const auto avg = group_average(model, z2, {0, 1}, {cplx(1.0, 0.0), c});
        const cplx z(0.4, -0.3);
        const cplx want = evaluate(model, z, 0) * (1.0 + std::norm(c)) +
                          evaluate(model, z, 1) * std::conj(c) + evaluate(model, z, 1) * c;
        CHECK(std::abs(evaluate(avg, z, 0) - want) < 1e-14);
    }

    // with c = 1 the example collapses to 3 |z|^2
    const auto avg1 = group_average(model, z2, {0, 1}, {cplx(1.0, 0.0), cplx(1.0, 0.0)});
    const cplx z(0.21, 0.7);
    CHECK(std::abs(evaluate(avg1, z, 0) - 3.0 * std::norm(z)) < 1e-14);

    // averaged kernels stay positive definite on the sphere (trivial group)
    const auto pts = sample_sphere_complex(3, 8, 999);
    CHECK(gram_check(avg1, pts, make_cyclic(1)).verdict == PdKind::pd);
    // F(conj z) = conj(F(z))
    CHECK(std::abs(evaluate(avg1, std::conj(z), 0) - std::conj(evaluate(avg1, z, 0))) < 1e-14);
}

TEST_CASE("recovery of group coefficients") {
    const auto z2 = make_cyclic(2);
    ComplexMonomialSeries f;
    f.coeffs.entries[{1, 1}] = GroupFunction{{cplx(1.0, 0.0), cplx(0.5, 0.0)}};
    const ComplexKernelModel model{f};

    const auto rec = recover_group_coefficients(model, z2, 1, 1, 1);
    CHECK(rec.a[0].real() == doctest::Approx(3.0));
    CHECK(rec.a[1].real() == doctest::Approx(1.0));
    CHECK(rec.a[2].real() == doctest::Approx(2.0));
    CHECK(std::abs(rec.phi - cplx(0.5, 0.0)) < 1e-12);

    // at the identity the recovery returns phi(e)
    const auto rec_e = recover_group_coefficients(model, z2, 0, 1, 1);
    CHECK(std::abs(rec_e.phi - cplx(1.0, 0.0)) < 1e-12);

    // constant-in-z kernel recovers phi at (0,0)
    ComplexMonomialSeries c;
    c.coeffs.entries[{0, 0}] = GroupFunction{{cplx(1.0, 0.0), cplx(0.25, 0.0)}};
    const auto rec_c = recover_group_coefficients(ComplexKernelModel{c}, z2, 1, 0, 0);
    CHECK(std::abs(rec_c.phi - cplx(0.25, 0.0)) < 1e-12);
}

TEST_CASE("recovery equals monomial coefficients on random pd models") {
    std::mt19937_64 rng(251);
    const auto groups = {make_cyclic(2), make_cyclic(4),
                         make_product(make_cyclic(2), make_cyclic(2))};
    for (const auto& g : groups) {
        for (int rep = 0; rep < 5; ++rep) {
            ComplexMonomialSeries f;
            std::uniform_int_distribution<int> ui(0, 3);
            for (int t = 0; t < 3; ++t) f.coeffs.entries[{ui(rng), ui(rng)}] =
                random_pd_function(g, rng);
            const ComplexKernelModel model{f};
            for (int u = 0; u < g.order; ++u)
                for (const auto& [mn, phi] : f.coeffs.entries) {
                    const auto rec =
                        recover_group_coefficients(model, g, u, mn.first, mn.second);
                    const cplx want = monomial_coefficients_complex(model, mn.first, mn.second, u);
                    CHECK(std::abs(rec.phi - want) < 1e-10);
                    for (const auto& a : rec.a) CHECK(a.real() >= -1e-10);
                }
        }
    }
}

TEST_CASE("limit study reproduces the 1/q rate for |z|^2") {
    const auto trivial = make_cyclic(1);
    std::vector<int> qs;
    for (int q = 2; q <= 12; ++q) qs.push_back(q);
    const auto rows = limit_study_complex(ComplexKernelModel{zzbar()}, 1, 1, qs, 0, trivial);
    REQUIRE(rows.size() == qs.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        const double q = qs[i];
        CHECK(rows[i].value.real() == doctest::Approx((q - 1.0) / q).epsilon(1e-12));
        CHECK(rows[i].abs_error == doctest::Approx(1.0 / q).epsilon(1e-9));
    }

    ComplexMonomialSeries fz;
    fz.coeffs.entries[{1, 0}] = scalar(1.0);
    const auto rz = limit_study_complex(ComplexKernelModel{fz}, 1, 0, qs, 0, trivial);
    for (const auto& row : rz) {
        CHECK(row.value.real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(row.abs_error < 1e-11);
    }

    const auto r10 = limit_study_complex(ComplexKernelModel{zzbar()}, 1, 0, qs, 0, trivial);
    for (const auto& row : r10) CHECK(std::abs(row.value) < 1e-12);
}

TEST_CASE("disc limit diagnostic") {
    std::vector<cplx> grid;
    for (int i = 1; i <= 4; ++i)
        for (int j = 0; j < 6; ++j) grid.push_back(std::polar(0.2 * i, M_PI * j / 3.0));

    const auto zero_rows = disc_limit_diagnostic(1, 0, {1.0, 5.0, 25.0}, grid);
    for (const auto& row : zero_rows) CHECK(row.sup_deviation < 1e-14);

    const auto r00 = disc_limit_diagnostic(0, 0, {2.0, 8.0}, grid);
    for (const auto& row : r00) CHECK(row.sup_deviation == 0.0);

    // |R^alpha_{1,1}(z) - |z|^2| = (1 - |z|^2)/(alpha + 1)
    const std::vector<double> alphas{1.0, 10.0, 100.0};
    const auto rows = disc_limit_diagnostic(1, 1, alphas, grid);
    double sup_base = 0.0;
    for (const auto& z : grid) sup_base = std::max(sup_base, 1.0 - std::norm(z));
    for (size_t i = 0; i < rows.size(); ++i)
        CHECK(rows[i].sup_deviation ==
              doctest::Approx(sup_base / (alphas[i] + 1.0)).epsilon(1e-12));
    CHECK(rows[2].sup_deviation < rows[1].sup_deviation);
    CHECK(rows[1].sup_deviation < rows[0].sup_deviation);

    CHECK_THROWS_AS(disc_limit_diagnostic(1, 1, {1.0}, {cplx(1.0, 0.0)}), std::domain_error);
}
