#include "pcakit/scree.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pcakit {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string scree_csv(std::span<const ScreePoint> points) {
  std::string out = "component,eigenvalue\n";
  char buf[64];
  for (const auto& pt : points) {
    out += std::to_string(pt.component);
    out += ',';
    const auto res = std::to_chars(buf, buf + sizeof buf, pt.eigenvalue);
    out.append(buf, res.ptr);
    out += '\n';
  }
  return out;
}

std::string scree_svg(std::span<const ScreePoint> points) {
  double top = 1.0;
  for (const auto& pt : points) top = std::max(top, pt.eigenvalue);
  top = std::ceil(top);
  const double count = static_cast<double>(std::max<std::size_t>(points.size(), 1));
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  auto x_of = [&](int component) {
    return count <= 1.0 ? kLeft + plot_w / 2.0
                        : kLeft + plot_w * (component - 1) / (count - 1.0);
  };
  auto y_of = [&](double value) {
    return kTop + plot_h * (1.0 - std::clamp(value, 0.0, top) / top);
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
     << "font-family=\"sans-serif\" font-size=\"16\">Scree Plot</text>\n";

  // axes
  os << "  <g stroke=\"black\" stroke-width=\"1\">\n"
     << "    <line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
     << "\" y2=\"" << kTop + plot_h << "\"/>\n"
     << "    <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
     << kTop + plot_h << "\"/>\n"
     << "  </g>\n";

  os << "  <g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (const auto& pt : points) {
    os << "    <text x=\"" << num(x_of(pt.component)) << "\" y=\"" << num(kTop + plot_h + 16)
       << "\" text-anchor=\"middle\">" << pt.component << "</text>\n";
  }
  const int ticks = static_cast<int>(top);
  const int step = ticks > 10 ? (ticks + 9) / 10 : 1;
  for (int t = 0; t <= ticks; t += step) {
    os << "    <text x=\"" << num(kLeft - 8) << "\" y=\"" << num(y_of(t) + 4)
       << "\" text-anchor=\"end\">" << t << "</text>\n";
  }
  os << "    <text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
     << "\" text-anchor=\"middle\">Component Number</text>\n"
     << "    <text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" "
     << "transform=\"rotate(-90 16 " << kTop + plot_h / 2 << ")\">Eigenvalue</text>\n"
     << "  </g>\n";

  os << "  <line x1=\"" << kLeft << "\" y1=\"" << num(y_of(1.0)) << "\" x2=\"" << kLeft + plot_w
     << "\" y2=\"" << num(y_of(1.0)) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";

  if (!points.empty()) {
    os << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i) os << ' ';
      os << num(x_of(points[i].component)) << ',' << num(y_of(points[i].eigenvalue));
    }
    os << "\"/>\n";
  }
  os << "  <g fill=\"steelblue\">\n";
  for (const auto& pt : points) {
    os << "    <circle cx=\"" << num(x_of(pt.component)) << "\" cy=\"" << num(y_of(pt.eigenvalue))
       << "\" r=\"4\"/>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace pcakit
