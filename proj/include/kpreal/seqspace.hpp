#pragma once

// =============================================================================
// kpreal - finitely supported scalar sequences
// =============================================================================
// Vector is the element type of every l_p space in the library. Entries are
// kept sorted by coordinate index with zeros dropped, and each Vector carries
// a field tag so real-only maps (kp_r, duality) can reject complex input.
// =============================================================================

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kpreal {

using Scalar = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Field { real, complex };

inline Field join(Field a, Field b) {
    return (a == Field::complex || b == Field::complex) ? Field::complex : Field::real;
}

/// A finitely supported sequence (a_m)_{m >= 0}.
class Vector {
public:
    struct Entry {
        std::size_t index;
        Scalar value;
    };

    Vector() = default;
    explicit Vector(Field field) : field_(field) {}

    /// Entries must have strictly increasing indices. Zero values are dropped.
    /// A real-tagged vector rejects entries with a nonzero imaginary part.
    Vector(std::vector<Entry> entries, Field field) : field_(field) {
        entries_.reserve(entries.size());
        for (std::size_t k = 0; k < entries.size(); ++k) {
            if (k > 0 && entries[k].index <= entries[k - 1].index)
                throw std::invalid_argument("Vector: indices must be strictly increasing");
            const Scalar v = entries[k].value;
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw std::invalid_argument("Vector: non-finite entry");
            if (field_ == Field::real && v.imag() != 0.0)
                throw std::invalid_argument("Vector: real-tagged vector with imaginary part");
            if (v != Scalar{})
                entries_.push_back(entries[k]);
        }
    }

    /// Dense real data placed at coordinates offset, offset+1, ...
    static Vector real(std::span<const double> dense, std::size_t offset = 0) {
        std::vector<Entry> e;
        e.reserve(dense.size());
        for (std::size_t k = 0; k < dense.size(); ++k)
            e.push_back({offset + k, Scalar{dense[k], 0.0}});
        return Vector(std::move(e), Field::real);
    }
    static Vector real(std::initializer_list<double> dense) {
        return real(std::span<const double>(dense.begin(), dense.size()));
    }

    static Vector complex(std::span<const Scalar> dense, std::size_t offset = 0) {
        std::vector<Entry> e;
        e.reserve(dense.size());
        for (std::size_t k = 0; k < dense.size(); ++k)
            e.push_back({offset + k, dense[k]});
        return Vector(std::move(e), Field::complex);
    }
    static Vector complex(std::initializer_list<Scalar> dense) {
        return complex(std::span<const Scalar>(dense.begin(), dense.size()));
    }

    /// value * e_index; real-tagged when the value is real.
    static Vector basis(std::size_t index, Scalar value = 1.0) {
        const Field f = value.imag() == 0.0 ? Field::real : Field::complex;
        return Vector({{index, value}}, f);
    }

    /// Builds from entries already known to satisfy the invariants.
    static Vector from_sorted(std::vector<Entry> entries, Field field) {
        Vector v(field);
        v.entries_ = std::move(entries);
        std::erase_if(v.entries_, [](const Entry& e) { return e.value == Scalar{}; });
        if (field == Field::real)
            for (auto& e : v.entries_) e.value = Scalar{e.value.real(), 0.0};
        return v;
    }

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    Field field() const noexcept { return field_; }
    std::size_t nnz() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }

    /// Value at coordinate m (0 off the support).
    Scalar operator[](std::size_t m) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), m,
                                   [](const Entry& e, std::size_t i) { return e.index < i; });
        return (it != entries_.end() && it->index == m) ? it->value : Scalar{};
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        s.reserve(entries_.size());
        for (const auto& e : entries_) s.push_back(e.index);
        return s;
    }

    /// One past the largest stored index (0 for the zero vector).
    std::size_t extent() const noexcept { return entries_.empty() ? 0 : entries_.back().index + 1; }

    /// Coordinatewise map f(index, value) -> Scalar over the support.
    template <typename F>
    Vector transform(F&& f, Field field) const {
        std::vector<Entry> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back({e.index, f(e.index, e.value)});
        return from_sorted(std::move(out), field);
    }

    friend Vector operator*(Scalar c, const Vector& v) {
        const Field f = c.imag() == 0.0 ? v.field_ : Field::complex;
        return v.transform([c](std::size_t, Scalar x) { return c * x; }, f);
    }
    friend Vector operator*(const Vector& v, Scalar c) { return c * v; }
    friend Vector operator*(double c, const Vector& v) { return Scalar{c, 0.0} * v; }

    Vector operator-() const { return -1.0 * *this; }

    friend Vector operator+(const Vector& a, const Vector& b) { return merge(a, b, 1.0); }
    friend Vector operator-(const Vector& a, const Vector& b) { return merge(a, b, -1.0); }

    friend bool operator==(const Vector& a, const Vector& b) {
        if (a.entries_.size() != b.entries_.size()) return false;
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            if (a.entries_[k].index != b.entries_[k].index ||
                a.entries_[k].value != b.entries_[k].value)
                return false;
        return true;
    }

private:
    static Vector merge(const Vector& a, const Vector& b, double sign) {
        std::vector<Entry> out;
        out.reserve(a.entries_.size() + b.entries_.size());
        auto i = a.entries_.begin();
        auto j = b.entries_.begin();
        while (i != a.entries_.end() || j != b.entries_.end()) {
            if (j == b.entries_.end() || (i != a.entries_.end() && i->index < j->index)) {
                out.push_back(*i++);
            } else if (i == a.entries_.end() || j->index < i->index) {
                out.push_back({j->index, sign * j->value});
                ++j;
            } else {
                out.push_back({i->index, i->value + sign * j->value});
                ++i;
                ++j;
            }
        }
        return from_sorted(std::move(out), join(a.field_, b.field_));
    }

    std::vector<Entry> entries_;
    Field field_ = Field::real;
};

namespace detail {

inline void check_exponent(double p) {
    if (std::isnan(p) || p < 1.0)
        throw std::domain_error("lp_norm: exponent must satisfy p >= 1");
}

/// Neumaier-compensated running sum; long flat blocks otherwise lose ~n eps.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// l_p norm of a list of nonnegative magnitudes.
inline double lp_of_magnitudes(std::span<const double> mags, double p) {
    check_exponent(p);
    if (p == kInf) {
        double m = 0.0;
        for (double x : mags) m = std::max(m, x);
        return m;
    }
    // Scale by the max to keep x^p in range for large p.
    double scale = 0.0;
    for (double x : mags) scale = std::max(scale, x);
    if (scale == 0.0) return 0.0;
    CompensatedSum s;
    if (p == 1.0) {
        for (double x : mags) s.add(x);
        return s.value();
    }
    if (p == 2.0) {
        for (double x : mags) s.add((x / scale) * (x / scale));
        return scale * std::sqrt(s.value());
    }
    for (double x : mags) s.add(std::pow(x / scale, p));
    return scale * std::pow(s.value(), 1.0 / p);
}

}  // namespace detail

inline double lp_norm(const Vector& v, double p) {
    std::vector<double> mags;
    mags.reserve(v.nnz());
    for (const auto& e : v.entries()) mags.push_back(std::abs(e.value));
    return detail::lp_of_magnitudes(mags, p);
}

/// (xi v)(m) = xi(m) v(m); xi is read as an element of l_inf.
inline Vector module_action(const Vector& xi, const Vector& v) {
    std::vector<Vector::Entry> out;
    auto i = xi.entries().begin();
    auto j = v.entries().begin();
    while (i != xi.entries().end() && j != v.entries().end()) {
        if (i->index < j->index) {
            ++i;
        } else if (j->index < i->index) {
            ++j;
        } else {
            out.push_back({i->index, i->value * j->value});
            ++i;
            ++j;
        }
    }
    return Vector::from_sorted(std::move(out), join(xi.field(), v.field()));
}

/// Entire part [t], taken as floor so that t - [t] lies in [0, 1).
inline std::int64_t entire_part(double t) {
    if (!std::isfinite(t)) throw std::domain_error("entire_part: non-finite argument");
    return static_cast<std::int64_t>(std::floor(t));
}

/// log(|v_m| / ||v||_2). Returns -inf off the support; callers multiplying by
/// v_m treat that product as 0.
inline double log_ratio(const Vector& v, std::size_t m) {
    const double n = lp_norm(v, 2.0);
    if (n == 0.0) throw std::invalid_argument("log_ratio: zero vector");
    return std::log(std::abs(v[m]) / n);
}

/// Bilinear coordinate pairing sum_m x_m y_m (no conjugation).
inline Scalar pairing(const Vector& x, const Vector& y) {
    const Vector xy = module_action(x, y);
    Scalar s{};
    for (const auto& e : xy.entries()) s += e.value;
    return s;
}

}  // namespace kpreal
