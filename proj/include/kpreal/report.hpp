#pragma once

// Tables for experiment output: CSV (source of truth), JSON (array of row
// objects with the same keys) and a static SVG line plot.

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <variant>
#include <vector>

namespace kpreal {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

/// Shortest round-trip representation; "inf"/"-inf"/"nan" for non-finite.
inline std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

inline std::string format_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) return v;
            else if constexpr (std::is_same_v<T, double>) return format_double(v);
            else return std::to_string(v);
        },
        c);
}

inline void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t k = 0; k < t.columns.size(); ++k) os << (k ? "," : "") << t.columns[k];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << format_cell(row[k]);
        os << '\n';
    }
}

inline nlohmann::json table_to_json(const Table& t) {
    auto out = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t k = 0; k < row.size() && k < t.columns.size(); ++k) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        if (std::isfinite(v)) obj[t.columns[k]] = v;
                        else obj[t.columns[k]] = format_double(v);
                    } else {
                        obj[t.columns[k]] = v;
                    }
                },
                row[k]);
        }
        out.push_back(std::move(obj));
    }
    return out;
}

inline void write_json(std::ostream& os, const Table& t) { os << table_to_json(t).dump(2) << '\n'; }

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

/// Minimal line chart with axes, tick labels and a legend.
inline std::string svg_line_plot(const std::string& title, const std::string& xlabel,
                                 const std::string& ylabel, const std::vector<Series>& series) {
    constexpr double W = 640, H = 420, L = 60, R = 20, T = 40, B = 50;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            if (first) { xmin = xmax = x; ymin = ymax = y; first = false; }
            xmin = std::min(xmin, x); xmax = std::max(xmax, x);
            ymin = std::min(ymin, y); ymax = std::max(ymax, y);
        }
    ymin = std::min(ymin, 0.0);
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };
    auto num = [](double v) {
        std::ostringstream o;
        o.precision(4);
        o << v;
        return o.str();
    };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
      << title << "</text>\n"
      << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = xmin + (xmax - xmin) * k / 4.0;
        const double yv = ymin + (ymax - ymin) * k / 4.0;
        o << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
          << num(xv) << "</text>\n"
          << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
          << num(yv) << "</text>\n";
    }
    o << "<text x=\"" << W / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
      << xlabel << "</text>\n"
      << "<text x=\"14\" y=\"" << H / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 14 "
      << H / 2 << ")\">" << ylabel << "</text>\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\" points=\"";
        for (auto [x, y] : s.points) o << px(x) << ',' << py(y) << ' ';
        o << "\"/>\n"
          << "<text x=\"" << L + 12 << "\" y=\"" << T + 16 + 16 * static_cast<double>(k)
          << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << s.color << "\">" << s.label << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace kpreal
