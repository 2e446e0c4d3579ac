// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include "nofade/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "nofade/csv.hpp"
#include "nofade/errors.hpp"

namespace nofade {

namespace {

// Canvas geometry shared by every plot.
constexpr double kCanvasW = 900.0;
constexpr double kCanvasH = 560.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 870.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 500.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#e377c2", "#8c564b"};
constexpr int kPaletteSize = 6;

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

/// Escapes a string for a JSON literal, covering the XML-special
/// characters too so the result can sit inside an SVG element verbatim.
std::string json_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '<': out += "\\u003c"; break;
            case '>': out += "\\u003e"; break;
            case '&': out += "\\u0026"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

Range padded(double lo, double hi) {
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) {
        const double bump = std::max(1.0, std::abs(lo) * 0.1);
        return {lo - bump, hi + bump};
    }
    const double pad = (hi - lo) * 0.05;
    return {lo - pad, hi + pad};
}

double scale(double v, Range r, double out_lo, double out_hi) {
    return out_lo + (v - r.lo) / (r.hi - r.lo) * (out_hi - out_lo);
}

std::string text_element(double x, double y, const std::string& content,
                         const char* anchor, int size, const char* extra = "") {
    std::string out = "  <text x=\"" + px(x) + "\" y=\"" + px(y) + "\" font-family=\"monospace\"";
    out += " font-size=\"" + std::to_string(size) + "\" fill=\"#222222\" text-anchor=\"";
    out += anchor;
    out += "\"";
    out += extra;
    out += ">" + xml_escape(content) + "</text>\n";
    return out;
}

std::string grid_line(double x1, double y1, double x2, double y2, const char* color) {
    return "  <line x1=\"" + px(x1) + "\" y1=\"" + px(y1) + "\" x2=\"" + px(x2) +
           "\" y2=\"" + px(y2) + "\" stroke=\"" + color + "\" stroke-width=\"1\"/>\n";
}

std::string marker(int shape, double cx, double cy, const char* fill, const std::string& attrs) {
    switch (shape % 4) {
        case 0:
            return "  <circle cx=\"" + px(cx) + "\" cy=\"" + px(cy) +
                   "\" r=\"4\" fill=\"" + fill + "\"" + attrs + "/>\n";
        case 1:
            return "  <rect x=\"" + px(cx - 3.6) + "\" y=\"" + px(cy - 3.6) +
                   "\" width=\"7.2\" height=\"7.2\" fill=\"" + fill + "\"" + attrs + "/>\n";
        case 2:
            return "  <polygon points=\"" + px(cx) + "," + px(cy - 4.6) + " " + px(cx - 4.2) +
                   "," + px(cy + 3.6) + " " + px(cx + 4.2) + "," + px(cy + 3.6) +
                   "\" fill=\"" + fill + "\"" + attrs + "/>\n";
        default:
            return "  <polygon points=\"" + px(cx) + "," + px(cy - 5.2) + " " + px(cx + 5.2) +
                   "," + px(cy) + " " + px(cx) + "," + px(cy + 5.2) + " " + px(cx - 5.2) + "," +
                   px(cy) + "\" fill=\"" + fill + "\"" + attrs + "/>\n";
    }
}

std::string header_and_frame(const std::string& metadata_json, const std::string& title,
                             const std::string& x_label, const std::string& y_label) {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"560\" "
           "viewBox=\"0 0 900 560\">\n";
    out += "  <metadata>" + metadata_json + "</metadata>\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"900\" height=\"560\" fill=\"#ffffff\"/>\n";
    out += text_element((kLeft + kRight) / 2, 28.0, title, "middle", 16);
    out += "  <rect x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" +
           px(kRight - kLeft) + "\" height=\"" + px(kBottom - kTop) +
           "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    out += text_element((kLeft + kRight) / 2, 540.0, x_label, "middle", 13);
    out += text_element(18.0, (kTop + kBottom) / 2, y_label, "middle", 13,
                        " transform=\"rotate(-90 18 275)\"");
    return out;
}

std::string linear_x_ticks(Range r) {
    std::string out;
    for (int k = 0; k <= 4; ++k) {
        const double v = r.lo + (r.hi - r.lo) * k / 4.0;
        const double x = scale(v, r, kLeft, kRight);
        out += grid_line(x, kTop, x, kBottom, "#dddddd");
        out += grid_line(x, kBottom, x, kBottom + 5, "#444444");
        out += text_element(x, kBottom + 20, tick_text(v), "middle", 11);
    }
    return out;
}

std::string log_x_ticks(Range r) {
    std::string out;
    const int first = static_cast<int>(std::ceil(r.lo - 1e-9));
    const int last = static_cast<int>(std::floor(r.hi + 1e-9));
    int step = 1;
    while ((last - first) / step > 12) ++step;
    for (int k = first; k <= last; k += step) {
        const double x = scale(static_cast<double>(k), r, kLeft, kRight);
        out += grid_line(x, kTop, x, kBottom, "#dddddd");
        out += grid_line(x, kBottom, x, kBottom + 5, "#444444");
        out += text_element(x, kBottom + 20, "1e" + std::to_string(k), "middle", 11);
    }
    return out;
}

std::string y_ticks(Range r) {
    std::string out;
    for (int k = 0; k <= 4; ++k) {
        const double v = r.lo + (r.hi - r.lo) * k / 4.0;
        const double y = scale(v, r, kBottom, kTop);
        out += grid_line(kLeft, y, kRight, y, "#dddddd");
        out += grid_line(kLeft - 5, y, kLeft, y, "#444444");
        out += text_element(kLeft - 8, y + 4, tick_text(v), "end", 11);
    }
    return out;
}

}  // namespace

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string render_scatter_svg(const ScatterSpec& spec) {
    std::size_t point_count = 0;
    for (const Series& s : spec.series) point_count += s.points.size();
    if (point_count == 0) {
        throw DegenerateInputError("scatter plot needs at least one point");
    }

    const bool log_x = spec.x_scale == AxisScale::log10;
    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
    bool first = true;
    for (const Series& s : spec.series) {
        for (const SeriesPoint& p : s.points) {
            double xv = p.x;
            if (log_x) {
                if (!(p.x > 0.0)) {
                    throw ValidationError("log10 x axis needs positive x, got point '" + p.label +
                                          "'");
                }
                xv = std::log10(p.x);
            }
            if (first) {
                x_min = x_max = xv;
                y_min = y_max = p.y;
                first = false;
            } else {
                x_min = std::min(x_min, xv);
                x_max = std::max(x_max, xv);
                y_min = std::min(y_min, p.y);
                y_max = std::max(y_max, p.y);
            }
        }
    }

    Range xr;
    if (log_x) {
        // Snap to whole decades so the tick marks land on 10^k.
        xr.lo = std::floor(x_min);
        xr.hi = std::ceil(x_max);
        if (xr.lo == xr.hi) xr.hi += 1.0;
    } else {
        xr = padded(x_min, x_max);
    }
    const Range yr = padded(y_min, y_max);

    std::string meta = "{\"kind\":\"" + json_escape(spec.kind) + "\",\"x_axis\":\"";
    meta += log_x ? "log10" : "linear";
    meta += "\",\"x_label\":\"" + json_escape(spec.x_label) + "\",\"y_label\":\"" +
            json_escape(spec.y_label) + "\",\"series\":" + std::to_string(spec.series.size()) +
            ",\"points\":" + std::to_string(point_count) + "}";

    std::string out = header_and_frame(meta, spec.title, spec.x_label, spec.y_label);
    out += log_x ? log_x_ticks(xr) : linear_x_ticks(xr);
    out += y_ticks(yr);

    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const Series& s = spec.series[si];
        const char* color = kPalette[si % kPaletteSize];
        for (const SeriesPoint& p : s.points) {
            const double cx = scale(log_x ? std::log10(p.x) : p.x, xr, kLeft, kRight);
            const double cy = scale(p.y, yr, kBottom, kTop);
            std::string attrs = " data-series=\"" + xml_escape(s.name) + "\" data-label=\"" +
                                xml_escape(p.label) + "\" data-x=\"" + format_double(p.x) +
                                "\" data-y=\"" + format_double(p.y) + "\"";
            out += marker(static_cast<int>(si), cx, cy, color, attrs);
        }
    }

    // Legend, one row per series, inside the top right of the frame.
    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const double ly = kTop + 16.0 + 18.0 * static_cast<double>(si);
        const double lx = kRight - 150.0;
        out += marker(static_cast<int>(si), lx, ly - 4.0, kPalette[si % kPaletteSize], "");
        out += text_element(lx + 10.0, ly, spec.series[si].name, "start", 12);
    }

    out += "</svg>\n";
    return out;
}

std::string render_histogram_svg(const HistogramSpec& spec) {
    if (spec.counts.empty() || spec.edges.size() != spec.counts.size() + 1) {
        throw ShapeError("histogram needs counts plus one more edge than counts");
    }
    const Range xr{spec.edges.front(), spec.edges.back()};
    std::uint64_t max_count = 1;
    std::uint64_t total = 0;
    for (std::uint64_t c : spec.counts) {
        max_count = std::max(max_count, c);
        total += c;
    }
    const Range yr{0.0, static_cast<double>(max_count) * 1.05};

    std::string meta = "{\"kind\":\"" + json_escape(spec.kind) +
                       "\",\"x_axis\":\"linear\",\"x_label\":\"" + json_escape(spec.x_label) +
                       "\",\"y_label\":\"" + json_escape(spec.y_label) +
                       "\",\"bins\":" + std::to_string(spec.counts.size()) +
                       ",\"total\":" + std::to_string(total) + "}";

    std::string out = header_and_frame(meta, spec.title, spec.x_label, spec.y_label);
    out += linear_x_ticks(xr);
    out += y_ticks(yr);

    for (std::size_t k = 0; k < spec.counts.size(); ++k) {
        const double x0 = scale(spec.edges[k], xr, kLeft, kRight);
        const double x1 = scale(spec.edges[k + 1], xr, kLeft, kRight);
        const double y = scale(static_cast<double>(spec.counts[k]), yr, kBottom, kTop);
        out += "  <rect x=\"" + px(x0) + "\" y=\"" + px(y) + "\" width=\"" + px(x1 - x0) +
               "\" height=\"" + px(kBottom - y) +
               "\" fill=\"#1f77b4\" shape-rendering=\"crispEdges\" data-lo=\"" +
               format_double(spec.edges[k]) + "\" data-hi=\"" + format_double(spec.edges[k + 1]) +
               "\" data-count=\"" + std::to_string(spec.counts[k]) + "\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace nofade
