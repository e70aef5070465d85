#include "svg.hpp"

#include <cstdio>

namespace rotevl::harness {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kMarginL = 56, kMarginR = 16, kMarginT = 32, kMarginB = 40;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

SvgPlot::SvgPlot(double xmin, double xmax, double ymin, double ymax, std::string title)
    : xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax), title_(std::move(title)) {}

double SvgPlot::px(double x) const {
    return kMarginL + (x - xmin_) / (xmax_ - xmin_) * (kWidth - kMarginL - kMarginR);
}

double SvgPlot::py(double y) const {
    return kHeight - kMarginB - (y - ymin_) / (ymax_ - ymin_) * (kHeight - kMarginT - kMarginB);
}

void SvgPlot::polyline(const std::vector<std::pair<double, double>>& pts,
                       const std::string& color, bool dotted) {
    if (pts.empty()) return;
    std::string d = "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"";
    if (dotted) d += " stroke-dasharray=\"2,3\"";
    d += " points=\"";
    for (const auto& [x, y] : pts) d += fmt(px(x)) + "," + fmt(py(y)) + " ";
    d += "\"/>";
    body_.push_back(d);
}

void SvgPlot::segment(double x0, double y0, double x1, double y1, const std::string& color) {
    body_.push_back("<line x1=\"" + fmt(px(x0)) + "\" y1=\"" + fmt(py(y0)) + "\" x2=\"" +
                    fmt(px(x1)) + "\" y2=\"" + fmt(py(y1)) + "\" stroke=\"" + color +
                    "\" stroke-width=\"2\"/>");
}

void SvgPlot::label(double x, double y, const std::string& text) {
    body_.push_back("<text x=\"" + fmt(px(x)) + "\" y=\"" + fmt(py(y)) +
                    "\" font-size=\"11\" font-family=\"monospace\">" + text + "</text>");
}

std::string SvgPlot::render() const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" "
                      "viewBox=\"0 0 640 420\">\n";
    out += "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
    // axes
    out += "<line x1=\"" + fmt(px(xmin_)) + "\" y1=\"" + fmt(py(ymin_)) + "\" x2=\"" +
           fmt(px(xmax_)) + "\" y2=\"" + fmt(py(ymin_)) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + fmt(px(xmin_)) + "\" y1=\"" + fmt(py(ymin_)) + "\" x2=\"" +
           fmt(px(xmin_)) + "\" y2=\"" + fmt(py(ymax_)) + "\" stroke=\"black\"/>\n";
    // tick labels at the corners plus midpoints
    for (double f : {0.0, 0.5, 1.0}) {
        const double x = xmin_ + f * (xmax_ - xmin_);
        const double y = ymin_ + f * (ymax_ - ymin_);
        out += "<text x=\"" + fmt(px(x)) + "\" y=\"" + fmt(py(ymin_) + 16) +
               "\" font-size=\"10\" text-anchor=\"middle\">" + fmt(x) + "</text>\n";
        out += "<text x=\"" + fmt(px(xmin_) - 8) + "\" y=\"" + fmt(py(y) + 3) +
               "\" font-size=\"10\" text-anchor=\"end\">" + fmt(y) + "</text>\n";
    }
    out += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"20\" font-size=\"13\" "
           "text-anchor=\"middle\" font-family=\"monospace\">" + title_ + "</text>\n";
    for (const auto& b : body_) out += b + "\n";
    out += "</svg>\n";
    return out;
}

} // namespace rotevl::harness
