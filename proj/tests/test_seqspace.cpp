#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "kpreal/seqspace.hpp"

using namespace kpreal;
using Catch::Approx;

TEST_CASE("Vector normalizes zeros and enforces ordering", "[seqspace]") {
    const Vector v({{0, 1.0}, {3, 0.0}, {5, -2.0}}, Field::real);
    REQUIRE(v.nnz() == 2);
    REQUIRE(v.support() == std::vector<std::size_t>{0, 5});
    REQUIRE(v[5] == Scalar{-2.0});
    REQUIRE(v[3] == Scalar{});

    REQUIRE_THROWS_AS(Vector({{2, 1.0}, {2, 1.0}}, Field::real), std::invalid_argument);
    REQUIRE_THROWS_AS(Vector({{3, 1.0}, {1, 1.0}}, Field::real), std::invalid_argument);
    REQUIRE_THROWS_AS(Vector({{0, Scalar{1.0, 1.0}}}, Field::real), std::invalid_argument);
    REQUIRE_THROWS_AS(Vector({{0, NAN}}, Field::real), std::invalid_argument);
}

TEST_CASE("Vector arithmetic keeps the field tag", "[seqspace]") {
    const Vector a = Vector::real({1.0, 2.0});
    const Vector b = Vector::basis(1, -2.0);
    const Vector s = a + b;
    REQUIRE(s.nnz() == 1);  // cancellation at index 1 is dropped
    REQUIRE(s.field() == Field::real);
    REQUIRE((Scalar{0.0, 1.0} * a).field() == Field::complex);
    REQUIRE((a - a).is_zero());
}

TEST_CASE("lp_norm", "[seqspace]") {
    REQUIRE(lp_norm(Vector::basis(1), 2.0) == 1.0);
    REQUIRE(lp_norm(Vector::real({3.0, 4.0}), 2.0) == 5.0);
    REQUIRE(lp_norm(Vector::real({1.0, 1.0}), kInf) == 1.0);
    REQUIRE(lp_norm(Vector{}, 3.0) == 0.0);
    REQUIRE(lp_norm(Vector::real({1.0, -2.0, 2.0}), 1.0) == 5.0);
    REQUIRE(lp_norm(Vector::complex({{3.0, 4.0}}), 2.0) == Approx(5.0));
    REQUIRE_THROWS_AS(lp_norm(Vector::basis(0), 0.5), std::domain_error);
    REQUIRE_THROWS_AS(lp_norm(Vector::basis(0), NAN), std::domain_error);
}

TEST_CASE("lp_norm properties on random vectors", "[seqspace][property]") {
    std::mt19937_64 rng(1234);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> pdist(1.0, 8.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> d(1 + trial % 40);
        for (auto& x : d) x = g(rng);
        const Vector v = Vector::real(d);
        const double c = g(rng) * 10.0;
        const double p = pdist(rng);
        const double q = p + pdist(rng);

        // absolute homogeneity
        for (double r : {p, 2.0, kInf})
            REQUIRE(std::abs(lp_norm(c * v, r) - std::abs(c) * lp_norm(v, r)) <= 1e-12 * std::abs(c) * lp_norm(v, r));
        // monotone decreasing in the exponent
        REQUIRE(lp_norm(v, q) <= lp_norm(v, p) * (1 + 1e-14));
        REQUIRE(lp_norm(v, kInf) <= lp_norm(v, q) * (1 + 1e-14));

        // module action contracts by ||xi||_inf
        std::vector<double> xd(d.size());
        for (auto& x : xd) x = g(rng);
        const Vector xi = Vector::real(xd);
        for (double r : {1.0, p, 2.0, kInf})
            REQUIRE(lp_norm(module_action(xi, v), r) <= lp_norm(xi, kInf) * lp_norm(v, r) * (1 + 1e-14));
    }
}

TEST_CASE("module_action", "[seqspace]") {
    const Vector v = Vector::real({2.0, 2.0});
    REQUIRE(module_action(Vector::real({1.0, 1.0}), v) == v);
    REQUIRE(module_action(Vector{}, v).is_zero());
    REQUIRE(module_action(Vector::real({1.0, 0.5}), v) == Vector::real({2.0, 1.0}));

    // support lies in the intersection
    const Vector xi({{1, 3.0}, {7, 1.0}}, Field::real);
    const Vector w({{0, 1.0}, {1, 1.0}, {2, 1.0}}, Field::real);
    REQUIRE(module_action(xi, w).support() == std::vector<std::size_t>{1});
}

TEST_CASE("entire_part is floor", "[seqspace]") {
    REQUIRE(entire_part(0.0) == 0);
    REQUIRE(entire_part(1.2) == 1);
    REQUIRE(entire_part(-0.6931) == -1);
    REQUIRE(entire_part(-2.0) == -2);
    REQUIRE_THROWS(entire_part(INFINITY));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int k = 0; k < 1000; ++k) {
        const double t = u(rng);
        const auto n = static_cast<double>(entire_part(t));
        REQUIRE(n <= t);
        REQUIRE(t < n + 1.0);
    }
}

TEST_CASE("log_ratio", "[seqspace]") {
    REQUIRE(log_ratio(Vector::basis(1), 1) == 0.0);
    const Vector h = (1.0 / std::sqrt(2.0)) * Vector::real({1.0, 1.0});
    REQUIRE(log_ratio(h, 0) == Approx(-0.5 * std::log(2.0)).epsilon(1e-12));
    REQUIRE(log_ratio(h, 0) == Approx(-0.34657).margin(1e-5));
    REQUIRE(log_ratio(Vector::real({3.0, 4.0}), 1) == Approx(std::log(0.8)).epsilon(1e-12));
    REQUIRE(log_ratio(Vector::real({3.0, 4.0}), 1) == Approx(-0.22314).margin(1e-5));
    REQUIRE(std::isinf(log_ratio(Vector::real({3.0, 4.0}), 9)));
    REQUIRE_THROWS_AS(log_ratio(Vector{}, 0), std::invalid_argument);
}

TEST_CASE("pairing is bilinear without conjugation", "[seqspace]") {
    const Vector x = Vector::complex({{0.0, 1.0}, {2.0, 0.0}});
    const Vector y = Vector::complex({{0.0, 1.0}, {3.0, 0.0}});
    REQUIRE(pairing(x, y) == Scalar{-1.0 + 6.0, 0.0});
    REQUIRE(pairing(Vector::basis(0), Vector::basis(1)) == Scalar{});
}
