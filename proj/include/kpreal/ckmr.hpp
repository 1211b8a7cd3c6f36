#pragma once

// =============================================================================
// kpreal - discrete J-method for the pseudolattice pair (l_p0, l_p1)
// =============================================================================
// A JSequence {b_n} is a finitely supported family of Vectors indexed by
// n in Z. It is read as the Laurent polynomial sum_n z^n b_n; evaluation at
// z = e^theta gives the interpolated element and the z-derivative at the same
// point gives the differential.
// =============================================================================

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "kpreal/seqspace.hpp"

namespace kpreal {

/// (p0, p1, theta) together with the derived exponent p and the level slope
/// lambda = p/p0 - p/p1. p1 may be kInf.
class InterpolationParams {
public:
    InterpolationParams() : InterpolationParams(1.0, kInf, 0.5) {}

    InterpolationParams(double p0, double p1, double theta) : p0_(p0), p1_(p1), theta_(theta) {
        if (!(p0 >= 1.0) || !std::isfinite(p0))
            throw std::invalid_argument("InterpolationParams: p0 must lie in [1, inf)");
        if (!(p1 > p0))
            throw std::invalid_argument("InterpolationParams: p1 must exceed p0");
        if (!(theta > 0.0 && theta < 1.0))
            throw std::invalid_argument("InterpolationParams: theta must lie in (0, 1)");
        const double inv_p1 = p1 == kInf ? 0.0 : 1.0 / p1;
        p_ = 1.0 / ((1.0 - theta) / p0 + theta * inv_p1);
        lambda_ = p_ / p0 - p_ * inv_p1;
    }

    double p0() const noexcept { return p0_; }
    double p1() const noexcept { return p1_; }
    double theta() const noexcept { return theta_; }
    double p() const noexcept { return p_; }
    double lambda() const noexcept { return lambda_; }

    friend bool operator==(const InterpolationParams&, const InterpolationParams&) = default;

private:
    double p0_;
    double p1_;
    double theta_;
    double p_ = 2.0;
    double lambda_ = 2.0;
};

/// A finitely supported two-sided family {b_n}. Zero terms are dropped and
/// all terms share one field tag.
class JSequence {
public:
    using Terms = std::map<std::int64_t, Vector>;

    JSequence() = default;
    explicit JSequence(Terms terms) {
        for (auto& [n, b] : terms) set(n, std::move(b));
    }

    void set(std::int64_t n, Vector b) {
        if (b.is_zero()) {
            terms_.erase(n);
            return;
        }
        for (const auto& [k, other] : terms_)
            if (k != n && other.field() != b.field())
                throw std::invalid_argument("JSequence: mixed field tags");
        terms_.insert_or_assign(n, std::move(b));
    }

    /// Adds v to the term at level n.
    void accumulate(std::int64_t n, const Vector& v) {
        auto it = terms_.find(n);
        set(n, it == terms_.end() ? v : it->second + v);
    }

    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    /// {b_{n - k}}: every term moved up k levels.
    JSequence shifted(std::int64_t k) const {
        JSequence out;
        for (const auto& [n, b] : terms_) out.terms_.emplace(n + k, b);
        return out;
    }

private:
    Terms terms_;
};

struct JNorm {
    double value;  // max(n0, n1)
    double n0;     // ||{b_n}||_{l_p0(l_p0)}
    double n1;     // ||{e^n b_n}||_{l_p1(l_p1)}
};

/// ||{e^{jn} b_n}||_{l_p(l_p)}; weight_exponent is j.
inline double component_norm(const JSequence& js, double p, int weight_exponent) {
    std::vector<double> level_norms;
    level_norms.reserve(js.terms().size());
    // Weight applied in the log domain: e^n alone overflows long before e^n ||b_n|| does.
    for (const auto& [n, b] : js.terms())
        level_norms.push_back(
            std::exp(static_cast<double>(weight_exponent * n) + std::log(lp_norm(b, p))));
    return detail::lp_of_magnitudes(level_norms, p);
}

inline JNorm j_norm(const JSequence& js, const InterpolationParams& params) {
    const double n0 = component_norm(js, params.p0(), 0);
    const double n1 = component_norm(js, params.p1(), 1);
    return {std::max(n0, n1), n0, n1};
}

/// delta_theta({b_n}) = sum_n e^{theta n} b_n.
inline Vector evaluate(const JSequence& js, const InterpolationParams& params) {
    Vector sum;
    for (const auto& [n, b] : js.terms())
        sum = sum + std::exp(params.theta() * static_cast<double>(n)) * b;
    return sum;
}

namespace detail {

/// Level n_m = -[lambda log(|a_m| / ||a||_p)] at which coordinate m is placed.
inline std::int64_t selector_level(double magnitude, double norm_p, double lambda) {
    return -entire_part(lambda * std::log(magnitude / norm_p));
}

}  // namespace detail

/// Lions-Peetre extremal decomposition of a: coordinate m goes to level n_m
/// with value e^{-n_m theta} a_m. Normalizing by ||a||_p makes it homogeneous.
inline JSequence extremal_selector(const Vector& a, const InterpolationParams& params) {
    if (a.is_zero()) throw std::invalid_argument("extremal_selector: zero vector");
    const double norm = lp_norm(a, params.p());
    std::map<std::int64_t, std::vector<Vector::Entry>> levels;
    for (const auto& e : a.entries()) {
        const std::int64_t n = detail::selector_level(std::abs(e.value), norm, params.lambda());
        levels[n].push_back({e.index, std::exp(-static_cast<double>(n) * params.theta()) * e.value});
    }
    JSequence js;
    for (auto& [n, entries] : levels) js.set(n, Vector::from_sorted(std::move(entries), a.field()));
    return js;
}

/// Omega = delta'_theta S: sum_n n e^{theta(n-1)} b_n.
inline Vector differential_from_selector(const JSequence& js, const InterpolationParams& params) {
    Vector sum;
    for (const auto& [n, b] : js.terms()) {
        if (n == 0) continue;
        const double nd = static_cast<double>(n);
        sum = sum + (nd * std::exp(params.theta() * (nd - 1.0))) * b;
    }
    return sum;
}

enum class OmegaVariant {
    inside,         // e^{-theta} sum -[lambda log(|a_m|/||a||)] a_m e_m
    outside,        // e^{-theta} sum -lambda [log(|a_m|/||a||)] a_m e_m
};

/// Closed form of the real Kalton-Peck differential. Norms are l_p with the
/// derived exponent p.
inline Vector omega_real(const Vector& a, const InterpolationParams& params,
                         OmegaVariant variant = OmegaVariant::inside) {
    if (a.is_zero()) throw std::invalid_argument("omega_real: zero vector");
    const double norm = lp_norm(a, params.p());
    const double lambda = params.lambda();
    const double damp = std::exp(-params.theta());
    return a.transform(
        [&](std::size_t, Scalar v) {
            const double t = std::log(std::abs(v) / norm);
            const double level = variant == OmegaVariant::inside
                                     ? -static_cast<double>(entire_part(lambda * t))
                                     : -lambda * static_cast<double>(entire_part(t));
            return damp * level * v;
        },
        a.field());
}

// -----------------------------------------------------------------------------
// Pseudolattice axiom (iii)
// -----------------------------------------------------------------------------

using Operator = Eigen::MatrixXd;

/// ||T||_{p -> p}. Exact for p in {1, 2, inf}; otherwise the Riesz-Thorin
/// bound ||T||_1^{1/p} ||T||_inf^{1-1/p}, which is an upper bound.
inline double operator_norm(const Operator& T, double p) {
    detail::check_exponent(p);
    if (T.size() == 0) return 0.0;
    const double n1 = T.cwiseAbs().colwise().sum().maxCoeff();
    const double ninf = T.cwiseAbs().rowwise().sum().maxCoeff();
    if (p == 1.0) return n1;
    if (p == kInf) return ninf;
    if (p == 2.0) {
        Eigen::JacobiSVD<Operator> svd(T);
        return svd.singularValues()(0);
    }
    return std::pow(n1, 1.0 / p) * std::pow(ninf, 1.0 - 1.0 / p);
}

inline Vector apply(const Operator& T, const Vector& v) {
    if (v.extent() > static_cast<std::size_t>(T.cols()))
        throw std::invalid_argument("apply: vector support exceeds operator domain");
    std::vector<Scalar> out(static_cast<std::size_t>(T.rows()), Scalar{});
    for (const auto& e : v.entries())
        for (Eigen::Index r = 0; r < T.rows(); ++r)
            out[static_cast<std::size_t>(r)] += T(r, static_cast<Eigen::Index>(e.index)) * e.value;
    Vector w = Vector::complex(out);
    return v.field() == Field::real ? Vector::from_sorted(w.entries(), Field::real) : w;
}

/// {T b_n}
inline JSequence push_forward(const Operator& T, const JSequence& js) {
    JSequence out;
    for (const auto& [n, b] : js.terms()) out.set(n, apply(T, b));
    return out;
}

struct AxiomReport {
    double max_ratio = 0.0;             // max over samples and j of N_j(Tb) / N_j(b)
    double max_normalized_ratio = 0.0;  // same, divided by ||T||_{p_j}
    double operator_norm_p0 = 0.0;
    double operator_norm_p1 = 0.0;
    bool passed = true;                 // every ratio <= ||T||_{p_j} (1 + 1e-12)
};

/// Checks ||{T b_n}||_{X_j(B_j)} <= C ||T|| ||{b_n}||_{X_j(B_j)} with C = 1
/// for both components of every sample.
inline AxiomReport pseudolattice_axiom_check(const Operator& T, std::span<const JSequence> samples,
                                             const InterpolationParams& params) {
    AxiomReport r;
    const double norms[2] = {operator_norm(T, params.p0()), operator_norm(T, params.p1())};
    const double exps[2] = {params.p0(), params.p1()};
    r.operator_norm_p0 = norms[0];
    r.operator_norm_p1 = norms[1];
    for (const auto& js : samples) {
        const JSequence image = push_forward(T, js);
        for (int j = 0; j < 2; ++j) {
            const double before = component_norm(js, exps[j], j);
            if (before == 0.0) continue;
            const double ratio = component_norm(image, exps[j], j) / before;
            r.max_ratio = std::max(r.max_ratio, ratio);
            if (norms[j] > 0.0) r.max_normalized_ratio = std::max(r.max_normalized_ratio, ratio / norms[j]);
            if (ratio > norms[j] * (1.0 + 1e-12)) r.passed = false;
        }
    }
    return r;
}

}  // namespace kpreal
