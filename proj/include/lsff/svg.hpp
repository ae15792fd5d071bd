// Copyright 2026 The LSFF Diet Cost Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LSFF_SVG_HPP
#define LSFF_SVG_HPP

// Minimal standalone SVG charts: grouped bars, box summaries and a
// scatter with a fitted curve and band. Coordinates are printed with two
// decimals so output is stable across runs.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace lsff::svg {

inline constexpr double kWidth = 720.0;
inline constexpr double kHeight = 420.0;
inline constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 90.0;

inline const std::vector<std::string>& palette() {
  static const std::vector<std::string> p = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                             "#66a61e", "#e6ab02", "#a6761d", "#666666"};
  return p;
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// Linear map from data range to pixel range.
struct Scale {
  double d0 = 0.0, d1 = 1.0, p0 = 0.0, p1 = 1.0;
  double operator()(double v) const { return d1 == d0 ? (p0 + p1) / 2 : p0 + (v - d0) / (d1 - d0) * (p1 - p0); }
};

// Pads a data range by 5% on each side; a degenerate range becomes +-1.
inline std::pair<double, double> padded(double lo, double hi) {
  if (!(lo < hi)) return {lo - 1.0, hi + 1.0};
  const double pad = (hi - lo) * 0.05;
  return {lo - pad, hi + pad};
}

class Document {
 public:
  explicit Document(const std::string& title) {
    os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(kHeight)
        << "\" viewBox=\"0 0 " << fmt(kWidth) << ' ' << fmt(kHeight) << "\">\n";
    os_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    text(kWidth / 2, 22, title, "middle", 15);
  }

  void line(double x1, double y1, double x2, double y2, const std::string& stroke, double width = 1.0,
            const std::string& dash = "") {
    os_ << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2)
        << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width) << '"';
    if (!dash.empty()) os_ << " stroke-dasharray=\"" << dash << '"';
    os_ << "/>\n";
  }

  void rect(double x, double y, double w, double h, const std::string& fill, const std::string& stroke = "none") {
    if (h < 0) y += h, h = -h;
    os_ << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
        << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
  }

  void circle(double x, double y, double r, const std::string& fill) {
    os_ << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(r) << "\" fill=\"" << fill
        << "\" fill-opacity=\"0.8\"/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke) {
    os_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2.00\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) os_ << (i ? " " : "") << fmt(pts[i].first) << ',' << fmt(pts[i].second);
    os_ << "\"/>\n";
  }

  void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& fill) {
    os_ << "<polygon fill=\"" << fill << "\" fill-opacity=\"0.25\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) os_ << (i ? " " : "") << fmt(pts[i].first) << ',' << fmt(pts[i].second);
    os_ << "\"/>\n";
  }

  void text(double x, double y, const std::string& s, const std::string& anchor = "start", double size = 11,
            double rotate = 0) {
    os_ << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" font-family=\"sans-serif\" font-size=\"" << fmt(size)
        << "\" text-anchor=\"" << anchor << '"';
    if (rotate != 0) os_ << " transform=\"rotate(" << fmt(rotate) << ' ' << fmt(x) << ' ' << fmt(y) << ")\"";
    os_ << '>' << escape(s) << "</text>\n";
  }

  // Left axis with five ticks and a label.
  void y_axis(const Scale& y, const std::string& label) {
    line(kLeft, kTop, kLeft, kHeight - kBottom, "black");
    for (int i = 0; i <= 4; ++i) {
      const double v = y.d0 + (y.d1 - y.d0) * i / 4.0;
      line(kLeft - 4, y(v), kLeft, y(v), "black");
      text(kLeft - 6, y(v) + 4, fmt(v), "end", 10);
    }
    text(16, (kTop + kHeight - kBottom) / 2, label, "middle", 12, -90);
  }

  void x_axis(const Scale& x, const std::string& label) {
    line(kLeft, kHeight - kBottom, kWidth - kRight, kHeight - kBottom, "black");
    for (int i = 0; i <= 4; ++i) {
      const double v = x.d0 + (x.d1 - x.d0) * i / 4.0;
      line(x(v), kHeight - kBottom, x(v), kHeight - kBottom + 4, "black");
      text(x(v), kHeight - kBottom + 16, fmt(v), "middle", 10);
    }
    text((kLeft + kWidth - kRight) / 2, kHeight - kBottom + 36, label, "middle", 12);
  }

  void legend(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      const double x = kLeft + 140.0 * static_cast<double>(i % 4);
      const double y = kHeight - 22.0 + 14.0 * static_cast<double>(i / 4) - (names.size() > 4 ? 14.0 : 0.0);
      rect(x, y - 9, 10, 10, palette()[i % palette().size()]);
      text(x + 14, y, names[i], "start", 10);
    }
  }

  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  std::ostringstream os_;
};

// values[s][c]: series s at category c. Missing values are NaN.
inline std::string bar_chart(const std::string& title, const std::vector<std::string>& categories,
                             const std::vector<std::string>& series, const std::vector<std::vector<double>>& values,
                             const std::string& y_label) {
  Document doc(title);
  double lo = 0.0, hi = 0.0;
  for (const auto& s : values) {
    for (double v : s) {
      if (std::isfinite(v)) lo = std::min(lo, v), hi = std::max(hi, v);
    }
  }
  const auto [d0, d1] = padded(lo, hi);
  const Scale y{d0, d1, kHeight - kBottom, kTop};
  doc.y_axis(y, y_label);
  doc.line(kLeft, y(0), kWidth - kRight, y(0), "#444444", 1.0, "4 3");
  const double band = (kWidth - kLeft - kRight) / std::max<double>(1.0, static_cast<double>(categories.size()));
  const double bar = band * 0.8 / std::max<double>(1.0, static_cast<double>(series.size()));
  for (std::size_t c = 0; c < categories.size(); ++c) {
    const double x0 = kLeft + band * static_cast<double>(c) + band * 0.1;
    for (std::size_t s = 0; s < series.size(); ++s) {
      const double v = c < values[s].size() ? values[s][c] : std::numeric_limits<double>::quiet_NaN();
      if (!std::isfinite(v)) continue;
      doc.rect(x0 + bar * static_cast<double>(s), y(0), bar * 0.95, y(v) - y(0), palette()[s % palette().size()]);
    }
    const double cx = kLeft + band * (static_cast<double>(c) + 0.5);
    doc.text(cx, kHeight - kBottom + 12, categories[c], "end", 9, -45);
  }
  doc.legend(series);
  return doc.finish();
}

struct Box {
  std::string label;
  double q25 = 0.0, median = 0.0, q75 = 0.0;
};

// One interquartile box with a median bar per category.
inline std::string box_chart(const std::string& title, const std::vector<Box>& boxes, const std::string& y_label) {
  Document doc(title);
  double lo = 0.0, hi = 0.0;
  for (const auto& b : boxes) lo = std::min(lo, b.q25), hi = std::max(hi, b.q75);
  const auto [d0, d1] = padded(lo, hi);
  const Scale y{d0, d1, kHeight - kBottom, kTop};
  doc.y_axis(y, y_label);
  doc.line(kLeft, y(0), kWidth - kRight, y(0), "#444444", 1.0, "4 3");
  const double band = (kWidth - kLeft - kRight) / std::max<double>(1.0, static_cast<double>(boxes.size()));
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto& b = boxes[i];
    const double x0 = kLeft + band * static_cast<double>(i) + band * 0.2;
    doc.rect(x0, y(b.q75), band * 0.6, y(b.q25) - y(b.q75), "#a6cee3", "#1f78b4");
    doc.line(x0, y(b.median), x0 + band * 0.6, y(b.median), "#1f78b4", 2.0);
    doc.text(x0 + band * 0.3, kHeight - kBottom + 12, b.label, "end", 9, -45);
  }
  return doc.finish();
}

struct Point {
  double x = 0.0, y = 0.0;
  std::size_t series = 0;
};

struct CurvePoint {
  double x = 0.0, fit = 0.0, lower = 0.0, upper = 0.0;
};

// Scatter coloured by series, one fitted curve with a shaded band.
inline std::string band_chart(const std::string& title, const std::vector<Point>& points,
                              const std::vector<std::string>& series, const std::vector<CurvePoint>& curve,
                              const std::string& x_label, const std::string& y_label, bool log_x = false) {
  Document doc(title);
  auto tx = [&](double x) { return log_x ? std::log10(x) : x; };
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo, ylo = 0.0, yhi = 0.0;
  for (const auto& p : points) {
    xlo = std::min(xlo, tx(p.x)), xhi = std::max(xhi, tx(p.x));
    ylo = std::min(ylo, p.y), yhi = std::max(yhi, p.y);
  }
  for (const auto& c : curve) {
    xlo = std::min(xlo, tx(c.x)), xhi = std::max(xhi, tx(c.x));
    ylo = std::min(ylo, c.lower), yhi = std::max(yhi, c.upper);
  }
  if (!std::isfinite(xlo)) xlo = 0.0, xhi = 1.0;
  const auto [x0, x1] = padded(xlo, xhi);
  const auto [y0, y1] = padded(ylo, yhi);
  const Scale x{x0, x1, kLeft, kWidth - kRight};
  const Scale y{y0, y1, kHeight - kBottom, kTop};
  doc.y_axis(y, y_label);
  doc.x_axis(x, log_x ? "log10 " + x_label : x_label);
  doc.line(kLeft, y(0), kWidth - kRight, y(0), "#444444", 1.0, "4 3");
  if (!curve.empty()) {
    std::vector<std::pair<double, double>> poly, mid;
    for (const auto& c : curve) poly.emplace_back(x(tx(c.x)), y(c.upper));
    for (auto it = curve.rbegin(); it != curve.rend(); ++it) poly.emplace_back(x(tx(it->x)), y(it->lower));
    for (const auto& c : curve) mid.emplace_back(x(tx(c.x)), y(c.fit));
    doc.polygon(poly, "#888888");
    doc.polyline(mid, "#222222");
  }
  for (const auto& p : points) doc.circle(x(tx(p.x)), y(p.y), 3.0, palette()[p.series % palette().size()]);
  doc.legend(series);
  return doc.finish();
}

}  // namespace lsff::svg

#endif  // LSFF_SVG_HPP
