#pragma once

// =============================================================================
// kpreal - the derived (twisted) space and its exact sequence
// =============================================================================
// 0 -> l_2 --i--> dB --pi--> l_2 -> 0 with i(w) = (w, 0), pi(x, y) = y and
// quasi-norm ||x - Omega(y)|| + ||y||.
// =============================================================================

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "kpreal/centralizers.hpp"
#include "kpreal/ckmr.hpp"
#include "kpreal/seqspace.hpp"

namespace kpreal {

struct DerivedVector {
    Vector x;
    Vector y;

    DerivedVector() = default;
    DerivedVector(Vector x_, Vector y_) : x(std::move(x_)), y(std::move(y_)) {
        if (!x.is_zero() && !y.is_zero() && x.field() != y.field())
            throw std::invalid_argument("DerivedVector: mixed field tags");
    }

    friend DerivedVector operator+(const DerivedVector& a, const DerivedVector& b) {
        return {a.x + b.x, a.y + b.y};
    }
};

inline double derived_quasinorm(const DerivedVector& d, const DifferentialMap& omega) {
    return lp_norm(d.x - omega(d.y), 2.0) + lp_norm(d.y, 2.0);
}

inline DerivedVector inclusion(const Vector& w) { return {w, Vector(w.field())}; }
inline Vector projection(const DerivedVector& d) { return d.y; }

/// ||KP(a) + e^theta Omega_inside(a)||_2 / ||a||_2 with KP at scale 2.
/// With the default parameters each coordinate factor is the fractional part
/// of 2 log(|a_m| / ||a||_2), so the ratio is < 1.
inline double complexification_defect(const Vector& a, const InterpolationParams& params = {}) {
    if (a.is_zero()) throw std::invalid_argument("complexification_defect: zero vector");
    if (a.field() != Field::real) throw std::invalid_argument("complexification_defect: complex input");
    const Vector diff = kp_complex(a, 2.0) + std::exp(params.theta()) * omega_real(a, params);
    return lp_norm(diff, 2.0) / lp_norm(a, 2.0);
}

/// |<Omega b, a> + <b, Phi a>| / (||b|| ||a||) with Phi = -Omega.
inline double dual_pairing_defect(const DifferentialMap& omega, const Vector& b, const Vector& a) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("dual_pairing_defect: zero input");
    const Scalar s = pairing(omega(b), a) - pairing(b, omega(a));
    return std::abs(s) / (lp_norm(b, 2.0) * lp_norm(a, 2.0));
}

/// <D(b*, a*), (x, y)> = <b*, y> + <a*, x>
inline Scalar dual_operator_pairing(const Vector& bstar, const Vector& astar, const DerivedVector& d) {
    return pairing(bstar, d.y) + pairing(astar, d.x);
}

struct QuasiTriangleReport {
    double sup = 0.0;  // max of q(d1 + d2) / (q(d1) + q(d2))
    std::size_t dim = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Empirical quasi-triangle constant. Samples sit near the graph of Omega,
/// d = (Omega(y) + r/10, y), where the first summand is small and the
/// quasilinearity defect dominates.
inline QuasiTriangleReport estimate_quasi_triangle(const DifferentialMap& omega, std::size_t dim,
                                                   std::size_t samples, std::uint64_t seed) {
    QuasiTriangleReport r{0.0, dim, samples, seed};
    for (std::size_t i = 0; i < samples; ++i) {
        auto rng = sample_engine(seed, 7, i);
        auto near_graph = [&] {
            const Vector y = gaussian_vector(rng, dim);
            const Vector noise = gaussian_vector(rng, dim);
            return DerivedVector{omega(y) + 0.1 * noise, y};
        };
        const DerivedVector d1 = near_graph();
        const DerivedVector d2 = near_graph();
        const double denom = derived_quasinorm(d1, omega) + derived_quasinorm(d2, omega);
        if (denom == 0.0) continue;
        r.sup = std::max(r.sup, derived_quasinorm(d1 + d2, omega) / denom);
    }
    return r;
}

}  // namespace kpreal
