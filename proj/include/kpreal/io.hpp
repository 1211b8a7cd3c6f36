#pragma once

// JSON encodings:
//   Vector              [[index, re, im], ...]   (im omitted when real-tagged)
//   JSequence           {"n": <Vector>, ...}
//   InterpolationParams {"p0": .., "p1": .. | "inf", "theta": ..}
//   DefectReport        {kind, scale, dim, samples, seed, sup, witness}

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "kpreal/centralizers.hpp"
#include "kpreal/ckmr.hpp"
#include "kpreal/seqspace.hpp"

namespace kpreal {

using json = nlohmann::json;

/// Accepts a number or the literal "inf".
inline double parse_extended(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInf;
        throw std::invalid_argument("expected a number or \"inf\"");
    }
    return j.get<double>();
}

inline json extended_to_json(double x) { return x == kInf ? json("inf") : json(x); }

inline void to_json(json& j, const Vector& v) {
    j = json::array();
    for (const auto& e : v.entries()) {
        if (v.field() == Field::real)
            j.push_back({e.index, e.value.real()});
        else
            j.push_back({e.index, e.value.real(), e.value.imag()});
    }
}

/// Tagged complex iff some triple carries an imaginary part slot.
inline void from_json(const json& j, Vector& v) {
    if (!j.is_array()) throw std::invalid_argument("Vector JSON must be an array");
    Field field = Field::real;
    std::vector<Vector::Entry> entries;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() < 2 || t.size() > 3)
            throw std::invalid_argument("Vector JSON entries must be [index, re] or [index, re, im]");
        const double im = t.size() == 3 ? t[2].get<double>() : 0.0;
        if (t.size() == 3) field = Field::complex;
        entries.push_back({t[0].get<std::size_t>(), Scalar{t[1].get<double>(), im}});
    }
    v = Vector(std::move(entries), field);
}

inline void to_json(json& j, const JSequence& js) {
    j = json::object();
    for (const auto& [n, b] : js.terms()) j[std::to_string(n)] = b;
}

inline void from_json(const json& j, JSequence& js) {
    if (!j.is_object()) throw std::invalid_argument("JSequence JSON must be an object");
    js = JSequence();
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        const long long n = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument("JSequence JSON: bad level key " + key);
        js.set(n, value.get<Vector>());
    }
}

inline void to_json(json& j, const InterpolationParams& p) {
    j = {{"p0", p.p0()}, {"p1", extended_to_json(p.p1())}, {"theta", p.theta()}};
}

inline void from_json(const json& j, InterpolationParams& p) {
    p = InterpolationParams(parse_extended(j.at("p0")), parse_extended(j.at("p1")),
                            j.at("theta").get<double>());
}

inline void to_json(json& j, const DefectReport& r) {
    j = {{"kind", std::string(to_string(r.kind))},
         {"scale", r.scale},
         {"dim", r.dim},
         {"samples", r.samples},
         {"seed", r.seed},
         {"sup", r.sup},
         {"witness", {{"index", r.witness_index}, {"first", r.witness_first}, {"second", r.witness_second}}}};
}

}  // namespace kpreal
