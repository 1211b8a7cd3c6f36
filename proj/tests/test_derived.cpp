#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "kpreal/derived.hpp"

using namespace kpreal;
using Catch::Approx;

namespace {

const double kLn2 = std::log(2.0);

Vector half_pair() { return (1.0 / std::sqrt(2.0)) * Vector::real({1.0, 1.0}); }

std::vector<double> gaussian_dense(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> g;
    std::vector<double> v(dim);
    for (auto& x : v) x = g(rng);
    return v;
}

void normalize(std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    for (auto& x : v) x /= std::sqrt(s);
}

double frac_by_fmod(double x) {
    double r = std::fmod(x, 1.0);
    return r < 0.0 ? r + 1.0 : r;
}

// Defect of the complexification diagram at the default parameters: each
// coordinate is scaled by the fractional part of 2 log(|a_m|/||a||_2).
double complexification_oracle(const std::vector<double>& a) {
    double ss = 0.0;
    for (double x : a) ss += x * x;
    double acc = 0.0;
    for (double x : a) {
        if (x == 0.0) continue;
        const double f = frac_by_fmod(2.0 * std::log(std::abs(x) / std::sqrt(ss)));
        acc += f * f * x * x;
    }
    return std::sqrt(acc / ss);
}

}  // namespace

TEST_CASE("derived_quasinorm", "[derived]") {
    const auto kp = DifferentialMap::kp(2.0);
    const Vector x = Vector::real({3.0, 4.0});
    REQUIRE(derived_quasinorm({x, Vector{}}, kp) == 5.0);

    const Vector y = Vector::real({1.0, -2.0, 0.5});
    REQUIRE(derived_quasinorm({kp(y), y}, kp) == Approx(lp_norm(y, 2.0)).epsilon(1e-15));

    // Omega(a) = -ln2 a for the half pair, so x - Omega(y) = e1 + ln2 a
    const Vector a = half_pair();
    const double expected = std::hypot(1.0 + kLn2 / std::sqrt(2.0), kLn2 / std::sqrt(2.0)) + 1.0;
    REQUIRE(derived_quasinorm({Vector::basis(0), a}, kp) == Approx(expected).epsilon(1e-12));
}

TEST_CASE("inclusion and projection form the exact sequence ends", "[derived]") {
    const auto kp = DifferentialMap::kp(2.0);
    const DerivedVector i1 = inclusion(Vector::basis(0));
    REQUIRE(derived_quasinorm(i1, kp) == 1.0);
    REQUIRE(projection(i1).is_zero());
    const Vector x = Vector::real({1.0, 2.0});
    const Vector y = Vector::real({0.0, 3.0});
    REQUIRE(projection({x, y}) == y);

    std::mt19937_64 rng(4);
    for (int k = 0; k < 50; ++k) {
        const Vector w = Vector::real(gaussian_dense(rng, 12));
        REQUIRE(derived_quasinorm(inclusion(w), kp) == lp_norm(w, 2.0));
    }
    REQUIRE_THROWS_AS(DerivedVector(Vector::basis(0), Vector::complex({{0.0, 1.0}})), std::invalid_argument);
}

TEST_CASE("complexification_defect", "[derived]") {
    REQUIRE(complexification_defect(Vector::basis(3)) == 0.0);
    REQUIRE(complexification_defect(half_pair()) == Approx(1.0 - kLn2).epsilon(1e-12));
    REQUIRE(std::abs(complexification_defect(half_pair()) - 0.3068528194400547) <= 1e-9);

    double prev = 0.0;
    for (int k = 1; k <= 6; ++k) {
        const double eps = std::pow(10.0, -k);
        const double v = complexification_defect(Vector::real({1.0, eps}));
        REQUIRE(v < 1.0);
        REQUIRE(v > 0.9);
        REQUIRE(v >= prev - 1e-3);
        prev = v;
    }
    REQUIRE(prev > 1.0 - 1e-9);

    REQUIRE_THROWS_AS(complexification_defect(Vector{}), std::invalid_argument);
    REQUIRE_THROWS_AS(complexification_defect(Vector::complex({{1.0, 1.0}})), std::invalid_argument);
}

TEST_CASE("complexification_defect matches the fractional-part oracle", "[derived][oracle]") {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 1000; ++k) {
        const auto a = gaussian_dense(rng, 1 + k % 64);
        const double got = complexification_defect(Vector::real(a));
        REQUIRE(got < 1.0);
        REQUIRE(got == Approx(complexification_oracle(a)).epsilon(1e-12).margin(1e-15));
    }
}

TEST_CASE("dual_pairing_defect", "[derived]") {
    const auto kp = DifferentialMap::kp(2.0);
    const Vector a = half_pair();
    REQUIRE(dual_pairing_defect(kp, a, a) <= 1e-15);
    REQUIRE(dual_pairing_defect(kp, Vector::basis(0), Vector::basis(1)) == 0.0);
    REQUIRE(dual_pairing_defect(kp, Vector::basis(0), a) == Approx(kLn2 / std::sqrt(2.0)).epsilon(1e-12));
    REQUIRE(dual_pairing_defect(kp, Vector::basis(0), a) == Approx(0.4901290717342736).epsilon(1e-12));
    REQUIRE_THROWS_AS(dual_pairing_defect(kp, Vector{}, a), std::invalid_argument);
}

TEST_CASE("dual pairing is bounded by 2 via the per-term log inequality", "[derived][oracle]") {
    // For unit a, b the defect is 2 |sum a_m b_m log(|b_m|/|a_m|)|, and
    // |x y log(y/x)| <= |y^2 - x^2| / 2 (from t log t <= (t^2 - 1)/2, t >= 1),
    // so the defect is at most sum |b_m^2 - a_m^2| <= 2.
    const auto kp = DifferentialMap::kp(2.0);
    std::mt19937_64 rng(909);
    for (int k = 0; k < 2000; ++k) {
        const std::size_t dim = 1 + k % 40;
        auto a = gaussian_dense(rng, dim);
        auto b = gaussian_dense(rng, dim);
        normalize(a);
        normalize(b);
        double closed = 0.0, bound = 0.0;
        for (std::size_t m = 0; m < dim; ++m) {
            closed += a[m] * b[m] * std::log(std::abs(b[m]) / std::abs(a[m]));
            bound += std::abs(b[m] * b[m] - a[m] * a[m]);
        }
        closed = 2.0 * std::abs(closed);
        const double got = dual_pairing_defect(kp, Vector::real(b), Vector::real(a));
        REQUIRE(got == Approx(closed).epsilon(1e-10).margin(1e-14));
        REQUIRE(got <= bound + 1e-12);
        REQUIRE(bound <= 2.0 + 1e-12);
    }
}

TEST_CASE("dual_operator_pairing", "[derived]") {
    const Vector bs = Vector::real({1.0, 2.0, -1.0});
    const Vector as = Vector::real({0.5, 0.0, 3.0});
    const Vector w = Vector::real({2.0, 2.0, 2.0});
    REQUIRE(dual_operator_pairing(bs, as, inclusion(w)) == pairing(as, w));
    const DerivedVector d{Vector::real({1.0, 1.0, 1.0}), Vector::real({0.0, 4.0, 1.0})};
    REQUIRE(dual_operator_pairing(bs, Vector{}, d) == pairing(bs, projection(d)));
    REQUIRE(dual_operator_pairing(Vector::basis(0), Vector::basis(1), {Vector::basis(1), Vector::basis(0)}) == Scalar{2.0});
}

TEST_CASE("quasi-triangle constant of the derived quasi-norm", "[derived][property]") {
    const auto kp = DifferentialMap::kp(2.0);
    const auto q8 = estimate_quasi_triangle(kp, 8, 500, 42);
    const auto q64 = estimate_quasi_triangle(kp, 64, 500, 42);
    REQUIRE(q8.sup >= 1.0);  // near-graph sums are dominated by the defect
    REQUIRE(std::isfinite(q64.sup));
    REQUIRE(q64.sup < 2.0 * q8.sup);
    REQUIRE(estimate_quasi_triangle(kp, 8, 500, 42).sup == q8.sup);
}
