#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rotevl::harness {

/// Minimal deterministic SVG line plot: fixed viewport, linear axes.
class SvgPlot {
public:
    SvgPlot(double xmin, double xmax, double ymin, double ymax, std::string title);

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color,
                  bool dotted = false);
    void segment(double x0, double y0, double x1, double y1, const std::string& color);
    void label(double x, double y, const std::string& text);

    std::string render() const;

private:
    double px(double x) const;
    double py(double y) const;

    double xmin_, xmax_, ymin_, ymax_;
    std::string title_;
    std::vector<std::string> body_;
};

} // namespace rotevl::harness
