#pragma once

// =============================================================================
// kpreal - Kalton-Peck maps and their quasilinearity / centralizer defects
// =============================================================================

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "kpreal/ckmr.hpp"
#include "kpreal/seqspace.hpp"

namespace kpreal {

/// scale * sum_m log(|a_m| / ||a||_2) a_m e_m, with 0 log 0 = 0.
inline Vector kp_complex(const Vector& a, double scale = 2.0) {
    if (a.is_zero()) throw std::invalid_argument("kp_complex: zero vector");
    const double norm = lp_norm(a, 2.0);
    return a.transform([&](std::size_t, Scalar v) { return scale * std::log(std::abs(v) / norm) * v; },
                       a.field());
}

/// sum_m x_m log(||x||_2 / |x_m|) e_m on real vectors.
inline Vector kp_r(const Vector& x) {
    if (x.is_zero()) throw std::invalid_argument("kp_r: zero vector");
    if (x.field() != Field::real) throw std::invalid_argument("kp_r: complex-tagged input");
    const double norm = lp_norm(x, 2.0);
    return x.transform([&](std::size_t, Scalar v) { return std::log(norm / std::abs(v)) * v; },
                       Field::real);
}

enum class MapKind { kp_complex, kp_r, kp_real_inside, kp_real_outside };

inline std::string_view to_string(MapKind k) {
    switch (k) {
        case MapKind::kp_complex: return "kp_complex";
        case MapKind::kp_r: return "kp_r";
        case MapKind::kp_real_inside: return "kp_real_inside";
        case MapKind::kp_real_outside: return "kp_real_outside";
    }
    return "unknown";
}

/// One member of the Kalton-Peck family, applied as scale * base_map(x).
/// For kp_complex the scale is the map's own factor; for the other kinds it
/// multiplies the unscaled formula. Omega(0) = 0.
struct DifferentialMap {
    MapKind kind = MapKind::kp_complex;
    double scale = 2.0;
    InterpolationParams params{};

    static DifferentialMap kp(double scale = 2.0) { return {MapKind::kp_complex, scale, {}}; }
    static DifferentialMap kp_r() { return {MapKind::kp_r, 1.0, {}}; }
    static DifferentialMap kp_real(InterpolationParams params = {},
                                   OmegaVariant variant = OmegaVariant::inside) {
        return {variant == OmegaVariant::inside ? MapKind::kp_real_inside : MapKind::kp_real_outside,
                1.0, params};
    }

    Vector operator()(const Vector& x) const {
        if (x.is_zero()) return Vector(x.field());
        switch (kind) {
            case MapKind::kp_complex: return kp_complex(x, scale);
            case MapKind::kp_r: return scale * kpreal::kp_r(x);
            case MapKind::kp_real_inside: return scale * omega_real(x, params, OmegaVariant::inside);
            case MapKind::kp_real_outside: return scale * omega_real(x, params, OmegaVariant::outside);
        }
        throw std::logic_error("DifferentialMap: unknown kind");
    }
};

/// Raised when a defect is requested at a point where it is undefined.
struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// ||Omega(x+y) - Omega(x) - Omega(y)||_2 / (||x||_2 + ||y||_2)
inline double quasilinearity_defect(const DifferentialMap& omega, const Vector& x, const Vector& y) {
    const Vector s = x + y;
    if (x.is_zero() || y.is_zero() || s.is_zero())
        throw DegenerateInput("quasilinearity_defect: x, y and x+y must be nonzero");
    return lp_norm(omega(s) - omega(x) - omega(y), 2.0) / (lp_norm(x, 2.0) + lp_norm(y, 2.0));
}

/// ||Omega(xi x) - xi Omega(x)||_2 / (||xi||_inf ||x||_2)
inline double centralizer_defect(const DifferentialMap& omega, const Vector& xi, const Vector& x) {
    const Vector xix = module_action(xi, x);
    if (x.is_zero() || xi.is_zero() || xix.is_zero())
        throw DegenerateInput("centralizer_defect: xi x must be nonzero");
    return lp_norm(omega(xix) - module_action(xi, omega(x)), 2.0) /
           (lp_norm(xi, kInf) * lp_norm(x, 2.0));
}

// -----------------------------------------------------------------------------
// Seeded sampling
// -----------------------------------------------------------------------------

/// Per-sample engine: sample i depends only on (seed, stream, i), so results
/// do not depend on how samples are split across workers.
inline std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

/// Standard Gaussian coordinates on 0..dim-1 (complex Gaussian for Field::complex).
template <typename Engine>
Vector gaussian_vector(Engine& rng, std::size_t dim, Field field = Field::real) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Vector::Entry> e;
    e.reserve(dim);
    for (std::size_t m = 0; m < dim; ++m) {
        const double re = gauss(rng);
        const double im = field == Field::complex ? gauss(rng) : 0.0;
        e.push_back({m, Scalar{re, im}});
    }
    return Vector::from_sorted(std::move(e), field);
}

/// All-ones on 0..dim-1 times c.
inline Vector constant_vector(std::size_t dim, Scalar c) {
    std::vector<Vector::Entry> e;
    e.reserve(dim);
    for (std::size_t m = 0; m < dim; ++m) e.push_back({m, c});
    return Vector::from_sorted(std::move(e), c.imag() == 0.0 ? Field::real : Field::complex);
}

enum class DefectKind { quasilinearity, centralizer };

inline std::string_view to_string(DefectKind k) {
    return k == DefectKind::quasilinearity ? "quasilinearity" : "centralizer";
}

/// How the second argument of a defect is drawn.
enum class PairMode {
    gaussian,   // independent Gaussian vector
    collinear,  // y = c x (quasilinearity); xi = c * ones (centralizer), c Gaussian
};

struct SamplerConfig {
    std::size_t dim = 64;
    std::size_t samples = 10000;
    std::uint64_t seed = 42;
    Field field = Field::real;
    PairMode mode = PairMode::gaussian;
    unsigned workers = 1;
};

struct DefectReport {
    DefectKind defect = DefectKind::quasilinearity;
    MapKind kind = MapKind::kp_complex;
    double scale = 2.0;
    std::size_t dim = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double sup = 0.0;
    std::size_t skipped = 0;    // degenerate draws
    std::size_t witness_index = 0;
    Vector witness_first;       // x (quasilinearity) or xi (centralizer)
    Vector witness_second;      // y (quasilinearity) or x (centralizer)
};

namespace detail {

struct SampleOutcome {
    bool degenerate = false;
    double value = 0.0;
    Vector first;
    Vector second;
};

inline SampleOutcome draw_defect(DefectKind defect, const DifferentialMap& omega,
                                 const SamplerConfig& cfg, std::size_t i) {
    auto rng = sample_engine(cfg.seed, static_cast<std::uint64_t>(defect), i);
    SampleOutcome out;
    if (defect == DefectKind::quasilinearity) {
        out.first = gaussian_vector(rng, cfg.dim, cfg.field);
        if (cfg.mode == PairMode::collinear) {
            std::normal_distribution<double> gauss;
            out.second = gauss(rng) * out.first;
        } else {
            out.second = gaussian_vector(rng, cfg.dim, cfg.field);
        }
    } else {
        if (cfg.mode == PairMode::collinear) {
            std::normal_distribution<double> gauss;
            out.first = constant_vector(cfg.dim, gauss(rng));
        } else {
            out.first = gaussian_vector(rng, cfg.dim, cfg.field);
        }
        out.second = gaussian_vector(rng, cfg.dim, cfg.field);
    }
    try {
        out.value = defect == DefectKind::quasilinearity
                        ? quasilinearity_defect(omega, out.first, out.second)
                        : centralizer_defect(omega, out.first, out.second);
    } catch (const DegenerateInput&) {
        out.degenerate = true;
    }
    return out;
}

}  // namespace detail

/// Monte-Carlo estimate of sup defect. The max is reduced with ties broken
/// by the lowest sample index, so any worker count gives the same report.
inline DefectReport estimate_sup_defect(DefectKind defect, const DifferentialMap& omega,
                                        const SamplerConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("estimate_sup_defect: samples must be >= 1");
    struct Partial {
        double sup = -1.0;
        std::size_t index = 0;
        std::size_t skipped = 0;
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(cfg.samples)));
    std::vector<Partial> partials(workers);
    auto run = [&](unsigned w) {
        Partial& p = partials[w];
        for (std::size_t i = w; i < cfg.samples; i += workers) {
            const auto o = detail::draw_defect(defect, omega, cfg, i);
            if (o.degenerate) {
                ++p.skipped;
                continue;
            }
            if (o.value > p.sup || (o.value == p.sup && i < p.index)) {
                p.sup = o.value;
                p.index = i;
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    DefectReport r;
    r.defect = defect;
    r.kind = omega.kind;
    r.scale = omega.scale;
    r.dim = cfg.dim;
    r.samples = cfg.samples;
    r.seed = cfg.seed;
    Partial best;
    for (const auto& p : partials) {
        r.skipped += p.skipped;
        if (p.sup > best.sup || (p.sup == best.sup && p.index < best.index)) best = p;
    }
    r.sup = std::max(best.sup, 0.0);
    if (best.sup >= 0.0) {
        const auto o = detail::draw_defect(defect, omega, cfg, best.index);
        r.witness_index = best.index;
        r.witness_first = o.first;
        r.witness_second = o.second;
    }
    return r;
}

}  // namespace kpreal
