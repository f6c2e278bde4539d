#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "optbench/errors.hpp"

namespace optbench::report {

namespace detail {

inline std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

struct Rgb {
    double r, g, b;
};

/// Five-stop perceptual ramp from deep violet to yellow.
inline Rgb colormap(double t) {
    static constexpr Rgb stops[] = {{0.267, 0.005, 0.329},
                                    {0.229, 0.322, 0.545},
                                    {0.128, 0.567, 0.551},
                                    {0.369, 0.789, 0.383},
                                    {0.993, 0.906, 0.144}};
    t = std::clamp(t, 0.0, 1.0);
    const double scaled = t * 4.0;
    const auto lo = static_cast<std::size_t>(std::min(3.0, std::floor(scaled)));
    const double frac = scaled - static_cast<double>(lo);
    const Rgb& a = stops[lo];
    const Rgb& b = stops[lo + 1];
    return {a.r + frac * (b.r - a.r), a.g + frac * (b.g - a.g), a.b + frac * (b.b - a.b)};
}

inline std::string hex(const Rgb& c) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  static_cast<int>(std::lround(c.r * 255.0)),
                  static_cast<int>(std::lround(c.g * 255.0)),
                  static_cast<int>(std::lround(c.b * 255.0)));
    return buf;
}

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

inline constexpr int kCellW = 72;
inline constexpr int kCellH = 26;
inline constexpr int kGutterLeft = 150;
inline constexpr int kGutterTop = 70;

inline std::string grid_header(std::size_t rows, std::size_t cols, const std::string& title,
                               const std::vector<std::string>& row_labels,
                               const std::vector<std::string>& col_labels) {
    const auto width = kGutterLeft + static_cast<int>(cols) * kCellW + 20;
    const auto height = kGutterTop + static_cast<int>(rows) * kCellH + 20;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" font-family=\"monospace\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"10\" y=\"20\" font-size=\"14\">" + escape(title) + "</text>\n";
    for (std::size_t c = 0; c < cols; ++c) {
        const int x = kGutterLeft + static_cast<int>(c) * kCellW + kCellW / 2;
        svg += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(kGutterTop - 8) +
               "\" font-size=\"11\" text-anchor=\"middle\">" + escape(col_labels[c]) +
               "</text>\n";
    }
    for (std::size_t r = 0; r < rows; ++r) {
        const int y = kGutterTop + static_cast<int>(r) * kCellH + kCellH / 2 + 4;
        svg += "<text x=\"" + std::to_string(kGutterLeft - 6) + "\" y=\"" + std::to_string(y) +
               "\" font-size=\"11\" text-anchor=\"end\">" + escape(row_labels[r]) +
               "</text>\n";
    }
    return svg;
}

} // namespace detail

/// Heatmap of values in [0, 1]; one colored cell per (row, col) with the
/// value printed inside. Output is byte-stable for identical input.
inline std::string svg_heatmap(const std::vector<std::string>& row_labels,
                               const std::vector<std::string>& col_labels,
                               const std::vector<std::vector<double>>& values,
                               const std::string& title) {
    if (row_labels.empty() || col_labels.empty()) {
        throw EmptyInput("heatmap needs at least one row and column");
    }
    if (values.size() != row_labels.size()) {
        throw DimensionMismatch("heatmap rows do not match labels");
    }
    std::string svg = detail::grid_header(row_labels.size(), col_labels.size(), title,
                                          row_labels, col_labels);
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
        if (values[r].size() != col_labels.size()) {
            throw DimensionMismatch("heatmap row " + std::to_string(r) +
                                    " does not match column labels");
        }
        for (std::size_t c = 0; c < col_labels.size(); ++c) {
            const int x = detail::kGutterLeft + static_cast<int>(c) * detail::kCellW;
            const int y = detail::kGutterTop + static_cast<int>(r) * detail::kCellH;
            const auto color = detail::colormap(values[r][c]);
            svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
                   "\" width=\"" + std::to_string(detail::kCellW) + "\" height=\"" +
                   std::to_string(detail::kCellH) + "\" fill=\"" + detail::hex(color) +
                   "\" stroke=\"white\"/>\n";
            const double luma = 0.299 * color.r + 0.587 * color.g + 0.114 * color.b;
            svg += "<text x=\"" + std::to_string(x + detail::kCellW / 2) + "\" y=\"" +
                   std::to_string(y + detail::kCellH / 2 + 4) +
                   "\" font-size=\"10\" text-anchor=\"middle\" fill=\"" +
                   (luma < 0.5 ? "white" : "black") + "\">" +
                   detail::fmt("%.3f", values[r][c]) + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

/// Label grid (e.g. per-slot winners); cells sharing a label share a
/// color, assigned from a fixed palette in first-appearance order.
inline std::string svg_categorical_grid(const std::vector<std::string>& row_labels,
                                        const std::vector<std::string>& col_labels,
                                        const std::vector<std::vector<std::string>>& cells,
                                        const std::string& title) {
    if (row_labels.empty() || col_labels.empty()) {
        throw EmptyInput("grid needs at least one row and column");
    }
    if (cells.size() != row_labels.size()) {
        throw DimensionMismatch("grid rows do not match labels");
    }
    static const std::vector<std::string> palette = {
        "#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2",
        "#eeca3b", "#b279a2", "#ff9da6", "#9d755d", "#bab0ac"};
    std::map<std::string, std::string> assigned;
    std::size_t next_color = 0;
    std::string svg = detail::grid_header(row_labels.size(), col_labels.size(), title,
                                          row_labels, col_labels);
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
        if (cells[r].size() != col_labels.size()) {
            throw DimensionMismatch("grid row " + std::to_string(r) +
                                    " does not match column labels");
        }
        for (std::size_t c = 0; c < col_labels.size(); ++c) {
            auto [it, inserted] = assigned.try_emplace(cells[r][c]);
            if (inserted) {
                it->second = palette[next_color % palette.size()];
                ++next_color;
            }
            const int x = detail::kGutterLeft + static_cast<int>(c) * detail::kCellW;
            const int y = detail::kGutterTop + static_cast<int>(r) * detail::kCellH;
            svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
                   "\" width=\"" + std::to_string(detail::kCellW) + "\" height=\"" +
                   std::to_string(detail::kCellH) + "\" fill=\"" + it->second +
                   "\" stroke=\"white\"/>\n";
            svg += "<text x=\"" + std::to_string(x + detail::kCellW / 2) + "\" y=\"" +
                   std::to_string(y + detail::kCellH / 2 + 4) +
                   "\" font-size=\"10\" text-anchor=\"middle\" fill=\"white\">" +
                   detail::escape(cells[r][c]) + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace optbench::report
