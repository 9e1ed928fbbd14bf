#pragma once

#include <string>
#include <utility>
#include <vector>

namespace taskalloc::cli {

/// Minimal SVG 1.1 document builder. Coordinates are written with two
/// decimals and elements appear in insertion order, so identical calls
/// produce identical bytes.
class SvgDocument {
public:
    SvgDocument(int width, int height);

    void rect(double x, double y, double w, double h, const std::string& fill,
              const std::string& stroke = "none");
    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double stroke_width = 1.0, const std::string& dash = "");
    void polyline(const std::vector<std::pair<double, double>>& points, const std::string& stroke,
                  double stroke_width = 2.0, const std::string& label = "");
    /// anchor is "start", "middle" or "end".
    void text(double x, double y, const std::string& content, const std::string& anchor = "middle",
              int font_size = 12, double rotate = 0.0);

    std::string str() const;

private:
    int width_;
    int height_;
    std::string body_;
};

/// Two-decimal rendering used for every coordinate.
std::string coord(double value);

/// XML-escapes &, <, >, " in text content and attribute values.
std::string escape_xml(const std::string& text);

struct Series {
    std::string name;
    std::string color;
    std::vector<std::pair<double, double>> points;  ///< (x, y) in data units
};

struct LineChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    int width = 800;
    int height = 450;
};

/// Axes, ticks, one polyline per series and a legend.
std::string render_line_chart(const LineChartSpec& spec);

struct HeatmapSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> xs;      ///< column centres (data units)
    std::vector<double> ys;      ///< row centres (data units)
    std::vector<double> values;  ///< values[ix * ys.size() + iy]
    std::vector<std::pair<double, double>> overlay;  ///< optional curve in data units
    std::string overlay_label;
    int width = 800;
    int height = 450;
};

/// One rect per cell on a diverging blue-white-red scale centred on zero,
/// plus the overlay polyline when present.
std::string render_heatmap(const HeatmapSpec& spec);

}  // namespace taskalloc::cli
