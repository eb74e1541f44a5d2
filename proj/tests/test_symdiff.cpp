#include "doctest.h"

#include <cmath>
#include <random>

#include "schoenberg/symdiff.hpp"

using namespace schoenberg;

TEST_CASE("derivative of the bare weight") {
    // d/dx (1-x^2)^s = -2 s x (1-x^2)^{s-1}
    WeightedPolynomial w{{Rational(1)}, Rational(7, 2)};
    const auto dw = derivative(w);
    CHECK(dw.exponent == Rational(5, 2));
    REQUIRE(dw.poly.size() == 2);
    CHECK(dw.poly[0] == Rational(0));
    CHECK(dw.poly[1] == Rational(-7));
}

TEST_CASE("product rule: q = x, s = 1") {
    WeightedPolynomial w{{Rational(0), Rational(1)}, Rational(1)};
    const auto dw = derivative(w);
    CHECK(dw.exponent == Rational(0));
    REQUIRE(dw.poly.size() == 3);
    CHECK(dw.poly[0] == Rational(1));
    CHECK(dw.poly[1] == Rational(0));
    CHECK(dw.poly[2] == Rational(-3)); // 1 - 3x^2
}

TEST_CASE("exponent bookkeeping under repeated derivatives") {
    for (int d : {2, 3, 5})
        for (int n : {1, 2, 4, 6}) {
            WeightedPolynomial w{{Rational(1)}, Rational(2 * n + d - 2, 2)};
            for (int k = 1; k <= n; ++k) {
                w = derivative(w);
                CHECK(w.exponent == Rational(2 * n + d - 2, 2) - Rational(k));
            }
            // after n derivatives the weight exponent is d/2 - 1
            CHECK(w.exponent == Rational(d - 2, 2));
        }
}

TEST_CASE("derivative agrees with finite differences") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(-0.8, 0.8);
    const double h = 1e-5;
    for (int rep = 0; rep < 40; ++rep) {
        WeightedPolynomial w{{Rational(rep % 5 - 2), Rational(1), Rational(rep % 3)},
                             Rational(rep % 4 + 1)};
        const auto dw = derivative(w);
        const double x = ux(rng);
        const double fd = (w.eval(x + h) - w.eval(x - h)) / (2 * h);
        CHECK(dw.eval(x) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("wirtinger rules") {
    // d/dz (1-|z|^2)^s = -s zbar (1-|z|^2)^{s-1}
    WeightedBiPolynomial w{{{{0, 0}, Rational(1)}}, Rational(4)};
    const auto dz = wirtinger_z(w);
    CHECK(dz.exponent == Rational(3));
    CHECK(dz.poly.at({0, 1}) == Rational(-4));

    // d/dzbar z = 0
    WeightedBiPolynomial hol{{{{1, 0}, Rational(1)}}, Rational(0)};
    CHECK(wirtinger_zbar(hol).poly.empty());

    // d^2/dzbar dz (1-|z|^2)^q = q(q-1) z zbar (..)^{q-2} - q (..)^{q-1};
    // in the closed (poly, exponent) form with exponent q-2 that is
    // (q(q-1) z zbar - q (1 - z zbar)) (1-|z|^2)^{q-2}.
    for (long long q : {3, 5, 9}) {
        WeightedBiPolynomial v{{{{0, 0}, Rational(1)}}, Rational(q)};
        const auto mixed = wirtinger_zbar(wirtinger_z(v));
        CHECK(mixed.exponent == Rational(q - 2));
        CHECK(mixed.poly.at({0, 0}) == Rational(-q));
        CHECK(mixed.poly.at({1, 1}) == Rational(q * q - q + q)); // q(q-1) + q
    }
}

TEST_CASE("wirtinger partials commute exactly") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> uc(-3, 3), ui(0, 3), ue(1, 5);
    for (int rep = 0; rep < 30; ++rep) {
        WeightedBiPolynomial w{{}, Rational(ue(rng))};
        for (int t = 0; t < 4; ++t)
            w.poly[{ui(rng), ui(rng)}] = Rational(uc(rng));
        const auto a = wirtinger_zbar(wirtinger_z(w));
        const auto b = wirtinger_z(wirtinger_zbar(w));
        CHECK(a.exponent == b.exponent);
        CHECK(a.poly == b.poly);
    }
}

TEST_CASE("wirtinger derivative agrees with finite differences") {
    WeightedBiPolynomial w{{{{1, 0}, Rational(2)}, {{1, 1}, Rational(-1)}}, Rational(3)};
    const auto dz = wirtinger_z(w);
    const double h = 1e-5;
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int rep = 0; rep < 20; ++rep) {
        const std::complex<double> z(u(rng), u(rng));
        // d/dz = (d/dx - i d/dy)/2
        const std::complex<double> fx =
            (w.eval(z + h) - w.eval(z - h)) / (2 * h);
        const std::complex<double> fy =
            (w.eval(z + std::complex<double>(0, h)) - w.eval(z - std::complex<double>(0, h))) /
            (2 * h);
        const std::complex<double> fd = 0.5 * (fx - std::complex<double>(0, 1) * fy);
        CHECK(std::abs(dz.eval(z) - fd) < 1e-6);
    }
}

TEST_CASE("rodrigues_check_real") {
    std::vector<double> xs;
    for (int i = 0; i < 21; ++i) xs.push_back(-0.95 + 0.095 * i);

    CHECK(rodrigues_check_real(2, 0, xs) == 0.0);
    CHECK(rodrigues_check_real(2, 1, xs) < 1e-13);
    CHECK(rodrigues_check_real(3, 2, xs) < 1e-12);
    for (int d : {1, 2, 3, 4, 7, 12})
        for (int n = 0; n <= 6; ++n) CHECK(rodrigues_check_real(d, n, xs) < 1e-11);

    CHECK_THROWS_AS(rodrigues_check_real(2, 11, xs), std::invalid_argument);
}

TEST_CASE("rodrigues_check_complex") {
    std::vector<std::complex<double>> zs;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 8; ++j)
            zs.push_back(std::polar(0.15 + 0.16 * i, 2 * M_PI * j / 8.0 + 0.1));

    CHECK(rodrigues_check_complex(3, 0, 0, zs) == 0.0);
    CHECK(rodrigues_check_complex(3, 1, 0, zs) < 1e-12);
    CHECK(rodrigues_check_complex(4, 1, 1, zs) < 1e-12);
    for (int q : {2, 3, 5, 9})
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) CHECK(rodrigues_check_complex(q, m, n, zs) < 1e-11);

    CHECK_THROWS_AS(rodrigues_check_complex(3, 6, 5, zs), std::invalid_argument);
}
