#include "taskalloc/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "taskalloc/error.hpp"

namespace taskalloc::cli {

namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 150.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 55.0;

std::string tick_label(double value, double step)
{
    int decimals = 0;
    while (decimals < 6 && std::fabs(step * std::pow(10.0, decimals) -
                                      std::round(step * std::pow(10.0, decimals))) > 1e-9) {
        ++decimals;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string s(buf);
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') {
        s.erase(0, 1);
    }
    return s;
}

// Step from {1, 2, 2.5, 5} x 10^k giving at most `target` intervals.
double nice_step(double span, int target)
{
    if (!(span > 0.0)) {
        return 1.0;
    }
    const double raw = span / target;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    for (const double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        if (m * magnitude >= raw) {
            return m * magnitude;
        }
    }
    return 10.0 * magnitude;
}

struct Frame {
    double x0, x1, y0, y1;  // data range
    double left, top, width, height;  // plot area in pixels

    double px(double x) const { return left + (x - x0) / (x1 - x0) * width; }
    double py(double y) const { return top + height - (y - y0) / (y1 - y0) * height; }
};

void draw_axes(SvgDocument& doc, const Frame& f, const std::string& title, const std::string& x_label,
               const std::string& y_label, int canvas_height)
{
    doc.rect(f.left, f.top, f.width, f.height, "none", "#000000");
    const double xstep = nice_step(f.x1 - f.x0, 5);
    for (double x = std::ceil(f.x0 / xstep - 1e-9) * xstep; x <= f.x1 + 1e-9; x += xstep) {
        const double px = f.px(x);
        doc.line(px, f.top + f.height, px, f.top + f.height + 5.0, "#000000");
        doc.text(px, f.top + f.height + 20.0, tick_label(x, xstep));
    }
    const double ystep = nice_step(f.y1 - f.y0, 5);
    for (double y = std::ceil(f.y0 / ystep - 1e-9) * ystep; y <= f.y1 + 1e-9; y += ystep) {
        const double py = f.py(y);
        doc.line(f.left - 5.0, py, f.left, py, "#000000");
        doc.line(f.left, py, f.left + f.width, py, "#dddddd", 0.5);
        doc.text(f.left - 8.0, py + 4.0, tick_label(y, ystep), "end");
    }
    doc.text(f.left + f.width / 2.0, 24.0, title, "middle", 15);
    doc.text(f.left + f.width / 2.0, canvas_height - 12.0, x_label);
    doc.text(18.0, f.top + f.height / 2.0, y_label, "middle", 12, -90.0);
}

std::string hex_color(double r, double g, double b)
{
    auto channel = [](double c) { return static_cast<int>(std::lround(std::clamp(c, 0.0, 1.0) * 255.0)); };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", channel(r), channel(g), channel(b));
    return buf;
}

// Blue (negative) through white to red (positive); scale = max |value|.
std::string diverging(double value, double scale)
{
    const double s = scale > 0.0 ? std::clamp(value / scale, -1.0, 1.0) : 0.0;
    if (s >= 0.0) {
        return hex_color(1.0, 1.0 - 0.8 * s, 1.0 - 0.8 * s);
    }
    return hex_color(1.0 + 0.8 * s, 1.0 + 0.8 * s, 1.0);
}

}  // namespace

std::string coord(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    std::string s(buf);
    if (s == "-0.00") {
        s = "0.00";
    }
    return s;
}

std::string escape_xml(const std::string& text)
{
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

SvgDocument::SvgDocument(int width, int height) : width_(width), height_(height)
{
    if (width < 1 || height < 1) {
        throw DomainError("SVG dimensions must be positive");
    }
}

void SvgDocument::rect(double x, double y, double w, double h, const std::string& fill,
                       const std::string& stroke)
{
    body_ += "<rect x=\"" + coord(x) + "\" y=\"" + coord(y) + "\" width=\"" + coord(w) +
             "\" height=\"" + coord(h) + "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\"/>\n";
}

void SvgDocument::line(double x1, double y1, double x2, double y2, const std::string& stroke,
                       double stroke_width, const std::string& dash)
{
    body_ += "<line x1=\"" + coord(x1) + "\" y1=\"" + coord(y1) + "\" x2=\"" + coord(x2) +
             "\" y2=\"" + coord(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
             coord(stroke_width) + "\"";
    if (!dash.empty()) {
        body_ += " stroke-dasharray=\"" + dash + "\"";
    }
    body_ += "/>\n";
}

void SvgDocument::polyline(const std::vector<std::pair<double, double>>& points,
                           const std::string& stroke, double stroke_width, const std::string& label)
{
    body_ += "<polyline";
    if (!label.empty()) {
        body_ += " data-series=\"" + escape_xml(label) + "\"";
    }
    body_ += " fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + coord(stroke_width) +
             "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) {
            body_ += ' ';
        }
        body_ += coord(points[i].first) + "," + coord(points[i].second);
    }
    body_ += "\"/>\n";
}

void SvgDocument::text(double x, double y, const std::string& content, const std::string& anchor,
                       int font_size, double rotate)
{
    body_ += "<text x=\"" + coord(x) + "\" y=\"" + coord(y) + "\" font-family=\"sans-serif\" font-size=\"" +
             std::to_string(font_size) + "\" text-anchor=\"" + anchor + "\"";
    if (rotate != 0.0) {
        body_ += " transform=\"rotate(" + coord(rotate) + " " + coord(x) + " " + coord(y) + ")\"";
    }
    body_ += ">" + escape_xml(content) + "</text>\n";
}

std::string SvgDocument::str() const
{
    const std::string w = std::to_string(width_);
    const std::string h = std::to_string(height_);
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w +
           "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n" +
           "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"#ffffff\"/>\n" +
           body_ + "</svg>\n";
}

std::string render_line_chart(const LineChartSpec& spec)
{
    double x0 = 0.0, x1 = 1.0, y1 = 0.0;
    bool any = false;
    for (const auto& s : spec.series) {
        for (const auto& [x, y] : s.points) {
            if (!any) {
                x0 = x1 = x;
                any = true;
            }
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y1 = std::max(y1, y);
        }
    }
    if (!(x1 > x0)) {
        x1 = x0 + 1.0;
    }
    if (!(y1 > 0.0)) {
        y1 = 1.0;
    }
    // Round the top of the y range up to a tick.
    const double ystep = nice_step(y1, 5);
    y1 = std::ceil(y1 / ystep - 1e-9) * ystep;

    SvgDocument doc(spec.width, spec.height);
    const Frame f{x0,
                  x1,
                  0.0,
                  y1,
                  kMarginLeft,
                  kMarginTop,
                  std::max(1.0, spec.width - kMarginLeft - kMarginRight),
                  std::max(1.0, spec.height - kMarginTop - kMarginBottom)};
    draw_axes(doc, f, spec.title, spec.x_label, spec.y_label, spec.height);

    double legend_y = f.top + 10.0;
    for (const auto& s : spec.series) {
        std::vector<std::pair<double, double>> pixels;
        pixels.reserve(s.points.size());
        for (const auto& [x, y] : s.points) {
            pixels.emplace_back(f.px(x), f.py(y));
        }
        doc.polyline(pixels, s.color, 2.0, s.name);
        const double lx = f.left + f.width + 12.0;
        doc.line(lx, legend_y, lx + 20.0, legend_y, s.color, 2.0);
        doc.text(lx + 26.0, legend_y + 4.0, s.name, "start", 11);
        legend_y += 18.0;
    }
    return doc.str();
}

std::string render_heatmap(const HeatmapSpec& spec)
{
    if (spec.xs.empty() || spec.ys.empty() || spec.values.size() != spec.xs.size() * spec.ys.size()) {
        throw DomainError("heatmap needs non-empty axes and one value per cell");
    }
    // Cell edges halfway between neighbouring centres.
    auto edges = [](const std::vector<double>& centres) {
        std::vector<double> e(centres.size() + 1);
        if (centres.size() == 1) {
            e[0] = centres[0] - 0.5;
            e[1] = centres[0] + 0.5;
            return e;
        }
        for (std::size_t i = 1; i < centres.size(); ++i) {
            e[i] = 0.5 * (centres[i - 1] + centres[i]);
        }
        e.front() = centres.front() - (e[1] - centres.front());
        e.back() = centres.back() + (centres.back() - e[centres.size() - 1]);
        return e;
    };
    const auto xe = edges(spec.xs);
    const auto ye = edges(spec.ys);

    SvgDocument doc(spec.width, spec.height);
    const Frame f{xe.front(),
                  xe.back(),
                  ye.front(),
                  ye.back(),
                  kMarginLeft,
                  kMarginTop,
                  std::max(1.0, spec.width - kMarginLeft - kMarginRight),
                  std::max(1.0, spec.height - kMarginTop - kMarginBottom)};

    double scale = 0.0;
    for (const double v : spec.values) {
        scale = std::max(scale, std::fabs(v));
    }
    for (std::size_t ix = 0; ix < spec.xs.size(); ++ix) {
        for (std::size_t iy = 0; iy < spec.ys.size(); ++iy) {
            const double left = f.px(xe[ix]);
            const double right = f.px(xe[ix + 1]);
            const double top = f.py(ye[iy + 1]);
            const double bottom = f.py(ye[iy]);
            doc.rect(left, top, right - left, bottom - top,
                     diverging(spec.values[ix * spec.ys.size() + iy], scale));
        }
    }
    draw_axes(doc, f, spec.title, spec.x_label, spec.y_label, spec.height);

    if (!spec.overlay.empty()) {
        std::vector<std::pair<double, double>> pixels;
        for (const auto& [x, y] : spec.overlay) {
            pixels.emplace_back(f.px(x), f.py(std::clamp(y, f.y0, f.y1)));
        }
        doc.polyline(pixels, "#000000", 3.0, spec.overlay_label);
    }

    // Colour legend: negative, zero, positive.
    const double lx = f.left + f.width + 12.0;
    const double ly = f.top + 10.0;
    const std::vector<std::pair<double, std::string>> stops = {
        {scale, "+" + tick_label(scale, 0.0001)}, {0.0, "0"}, {-scale, "-" + tick_label(scale, 0.0001)}};
    for (std::size_t i = 0; i < stops.size(); ++i) {
        doc.rect(lx, ly + 22.0 * i, 16.0, 16.0, diverging(stops[i].first, scale), "#000000");
        doc.text(lx + 22.0, ly + 22.0 * i + 12.0, stops[i].second, "start", 11);
    }
    return doc.str();
}

}  // namespace taskalloc::cli
