#pragma once

// =============================================================================
// kpreal - block families and the growth of Omega on their span
// =============================================================================
// For sup-normalized consecutive blocks u_1..u_N with entries lambda_{n,j},
//   g(z) = (sum_{n,j} |lambda_{n,j}|^{2z})^{z - 1/2},  f(z) = g(z) sum_n u_n,
// f(1/2) = sum_n u_n and g'(1/2) = log sum_n ||u_n||_1.
// =============================================================================

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "kpreal/centralizers.hpp"
#include "kpreal/seqspace.hpp"

namespace kpreal {

class BlockFamily {
public:
    struct Stats {
        double l1;
        double l2;
        std::size_t size;  // |u_n|, the support cardinality
    };

    BlockFamily() = default;

    /// Blocks must be nonzero, sup-normalized and consecutive: every index of
    /// u_n precedes every index of u_{n+1}.
    explicit BlockFamily(std::vector<Vector> blocks) : blocks_(std::move(blocks)) {
        for (std::size_t n = 0; n < blocks_.size(); ++n) {
            const Vector& u = blocks_[n];
            if (u.is_zero()) throw std::invalid_argument("BlockFamily: zero block");
            if (std::abs(lp_norm(u, kInf) - 1.0) > 1e-12)
                throw std::invalid_argument("BlockFamily: blocks must satisfy ||u_n||_inf = 1");
            if (n > 0 && u.entries().front().index < blocks_[n - 1].extent())
                throw std::invalid_argument("BlockFamily: blocks must be consecutive");
            stats_.push_back({lp_norm(u, 1.0), lp_norm(u, 2.0), u.nnz()});
        }
    }

    const std::vector<Vector>& blocks() const noexcept { return blocks_; }
    const std::vector<Stats>& stats() const noexcept { return stats_; }
    std::size_t size() const noexcept { return blocks_.size(); }

    /// sum_{n <= count} u_n
    Vector block_sum(std::size_t count) const {
        if (count > blocks_.size()) throw std::out_of_range("BlockFamily::block_sum");
        std::vector<Vector::Entry> e;
        Field f = Field::real;
        for (std::size_t n = 0; n < count; ++n) {
            e.insert(e.end(), blocks_[n].entries().begin(), blocks_[n].entries().end());
            f = join(f, blocks_[n].field());
        }
        return Vector::from_sorted(std::move(e), f);
    }
    Vector block_sum() const { return block_sum(blocks_.size()); }

    BlockFamily prefix(std::size_t count) const {
        return BlockFamily(std::vector<Vector>(blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(count)));
    }

private:
    std::vector<Vector> blocks_;
    std::vector<Stats> stats_;
};

inline constexpr std::size_t kMaxDyadicBlocks = 26;

/// u_n = indicator of 2^n fresh consecutive coordinates, n = 1..N.
inline BlockFamily flat_dyadic_blocks(std::size_t N) {
    if (N < 1) throw std::invalid_argument("flat_dyadic_blocks: N must be >= 1");
    if (N > kMaxDyadicBlocks) throw std::invalid_argument("flat_dyadic_blocks: N too large");
    std::vector<Vector> blocks;
    std::size_t next = 0;
    for (std::size_t n = 1; n <= N; ++n) {
        const std::size_t len = std::size_t{1} << n;
        std::vector<Vector::Entry> e;
        e.reserve(len);
        for (std::size_t k = 0; k < len; ++k) e.push_back({next + k, 1.0});
        next += len;
        blocks.push_back(Vector::from_sorted(std::move(e), Field::real));
    }
    return BlockFamily(std::move(blocks));
}

/// u_n = (1, 1/2, ..., 2^{-(n-1)}) on n fresh coordinates, n = 1..N.
inline BlockFamily geometric_blocks(std::size_t N) {
    if (N < 1) throw std::invalid_argument("geometric_blocks: N must be >= 1");
    std::vector<Vector> blocks;
    std::size_t next = 0;
    for (std::size_t n = 1; n <= N; ++n) {
        std::vector<Vector::Entry> e;
        for (std::size_t k = 0; k < n; ++k) e.push_back({next + k, std::ldexp(1.0, -static_cast<int>(k))});
        next += n;
        blocks.push_back(Vector::from_sorted(std::move(e), Field::real));
    }
    return BlockFamily(std::move(blocks));
}

/// (sum |lambda|^{2z})^{z - 1/2}, principal branch throughout.
inline Scalar g_scalar(const BlockFamily& family, Scalar z) {
    Scalar s{};
    for (const auto& u : family.blocks())
        for (const auto& e : u.entries()) s += std::exp(2.0 * z * std::log(std::abs(e.value)));
    return std::exp((z - 0.5) * std::log(s));
}

inline Vector f_selector(const BlockFamily& family, Scalar z) {
    return g_scalar(family, z) * family.block_sum();
}

/// log sum_n ||u_n||_1
inline double g_log_derivative_closed(const BlockFamily& family) {
    if (family.size() == 0) throw std::invalid_argument("g_log_derivative_closed: empty family");
    double s = 0.0;
    for (const auto& st : family.stats()) s += st.l1;
    return std::log(s);
}

struct GrowthRow {
    std::size_t N;
    double ratio;       // ||Omega(sum^N u_n)||_2 / ||sum^N u_n||_2
    double prediction;  // log sum^N ||u_n||_1
};

/// One row per prefix N = 1..min(Nmax, family.size()).
inline std::vector<GrowthRow> growth_curve(const BlockFamily& family, std::size_t Nmax,
                                           const DifferentialMap& omega) {
    if (Nmax < 1) throw std::invalid_argument("growth_curve: Nmax must be >= 1");
    std::vector<GrowthRow> rows;
    std::vector<Vector::Entry> acc;
    double l1 = 0.0;
    Field field = Field::real;
    const std::size_t last = std::min(Nmax, family.size());
    for (std::size_t N = 1; N <= last; ++N) {
        const Vector& u = family.blocks()[N - 1];
        acc.insert(acc.end(), u.entries().begin(), u.entries().end());
        l1 += family.stats()[N - 1].l1;
        field = join(field, u.field());
        const Vector sum = Vector::from_sorted(acc, field);
        rows.push_back({N, lp_norm(omega(sum), 2.0) / lp_norm(sum, 2.0), std::log(l1)});
    }
    return rows;
}

}  // namespace kpreal
