// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nofade {

/// Plots are rendered as standalone SVG text with a fixed 900 x 560
/// canvas. Rendering is a pure function of its inputs: no clocks, no
/// randomness, so the same inputs give byte-identical files. Every mark
/// echoes the value it was plotted from in data-* attributes, and a
/// <metadata> element carries a small JSON description, so a reader can
/// check the picture against the CSV it came from without rescaling
/// pixels.

struct SeriesPoint {
    double x = 0.0;
    double y = 0.0;
    std::string label;
};

struct Series {
    std::string name;
    std::vector<SeriesPoint> points;
};

enum class AxisScale { linear, log10 };

struct ScatterSpec {
    std::string kind;  // machine-readable plot id for the metadata block
    std::string title;
    std::string x_label;
    std::string y_label;
    AxisScale x_scale = AxisScale::linear;
    std::vector<Series> series;
};

/// Throws DegenerateInputError when no series has a point, and
/// ValidationError when a log10 x axis meets a non-positive x.
std::string render_scatter_svg(const ScatterSpec& spec);

struct HistogramSpec {
    std::string kind;
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> edges;          // bin boundaries, one more than counts
    std::vector<std::uint64_t> counts;  // one bar per bin, zeros included
};

/// Throws ShapeError unless edges.size() == counts.size() + 1 with at
/// least one bin.
std::string render_histogram_svg(const HistogramSpec& spec);

/// Escapes &, <, >, and " for use in SVG text and attributes.
std::string xml_escape(std::string_view text);

}  // namespace nofade
