#include "wallcross/svg.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace wallcross {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 480;
constexpr double kMargin = 40;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
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

struct Frame {
  Viewport v;
  double x(const Rational& b) const {
    return kMargin + ((b - v.b_lo) / (v.b_hi - v.b_lo)).to_double() * (kWidth - 2 * kMargin);
  }
  double y(const Rational& w) const {
    return kHeight - kMargin - ((w - v.w_lo) / (v.w_hi - v.w_lo)).to_double() * (kHeight - 2 * kMargin);
  }
};

Rational clamp(const Rational& x, const Rational& lo, const Rational& hi) { return max(lo, min(hi, x)); }

// Exact clipping of a line to the viewport rectangle.
std::optional<std::pair<PlanePoint, PlanePoint>> clip(const WallLine& l, const Viewport& v) {
  if (l.is_vertical()) {
    Rational b = -l.C() / l.B();
    if (b < v.b_lo || b > v.b_hi) return std::nullopt;
    return std::make_pair(PlanePoint{b, v.w_lo}, PlanePoint{b, v.w_hi});
  }
  Rational s = l.slope(), t = l.intercept();
  Rational lo = v.b_lo, hi = v.b_hi;
  if (s.is_zero()) {
    if (t < v.w_lo || t > v.w_hi) return std::nullopt;
  } else {
    Rational x1 = (v.w_lo - t) / s, x2 = (v.w_hi - t) / s;
    lo = max(lo, min(x1, x2));
    hi = min(hi, max(x1, x2));
    if (lo > hi) return std::nullopt;
  }
  return std::make_pair(PlanePoint{lo, l.w_at(lo)}, PlanePoint{hi, l.w_at(hi)});
}

}  // namespace

std::string render_svg(const Scene& scene) {
  const Viewport& v = scene.viewport;
  if (!(v.b_lo < v.b_hi) || !(v.w_lo < v.w_hi)) throw Error(ErrorCode::EmptyViewport, "viewport has no area");
  Frame f{v};
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  std::vector<Rational> bs;
  for (int i = 0; i < kParabolaSamples; ++i) {
    bs.push_back(v.b_lo + (v.b_hi - v.b_lo) * Rational(i) / Rational(kParabolaSamples - 1));
  }
  auto boundary_w = [&](const Rational& b) { return clamp(b * b / Rational(2), v.w_lo, v.w_hi); };
  std::ostringstream curve;
  for (int i = 0; i < kParabolaSamples; ++i) {
    curve << (i == 0 ? "M " : " L ") << num(f.x(bs[i])) << "," << num(f.y(boundary_w(bs[i])));
  }
  os << "<path class=\"U\" d=\"" << curve.str() << " L " << num(f.x(v.b_hi)) << "," << num(f.y(v.w_hi)) << " L "
     << num(f.x(v.b_lo)) << "," << num(f.y(v.w_hi)) << " Z\" fill=\"#dde8f5\" stroke=\"none\"/>\n";
  os << "<path class=\"boundary\" d=\"" << curve.str() << "\" fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"1.5\"/>\n";

  // axes as paths so that <line> elements are exactly the scene lines
  std::ostringstream axes;
  if (v.w_lo <= Rational(0) && Rational(0) <= v.w_hi) {
    axes << "M " << num(f.x(v.b_lo)) << "," << num(f.y(Rational(0))) << " L " << num(f.x(v.b_hi)) << ","
         << num(f.y(Rational(0)));
  }
  if (v.b_lo <= Rational(0) && Rational(0) <= v.b_hi) {
    if (!axes.str().empty()) axes << " ";
    axes << "M " << num(f.x(Rational(0))) << "," << num(f.y(v.w_lo)) << " L " << num(f.x(Rational(0))) << ","
         << num(f.y(v.w_hi));
  }
  if (!axes.str().empty()) {
    os << "<path class=\"axes\" d=\"" << axes.str() << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.8\"/>\n";
  }
  os << "<text x=\"" << num(kWidth - kMargin) << "\" y=\"" << num(kHeight - kMargin / 3)
     << "\" font-size=\"12\" text-anchor=\"end\">b</text>\n";
  os << "<text x=\"" << num(kMargin / 3) << "\" y=\"" << num(kMargin) << "\" font-size=\"12\">w</text>\n";

  for (const SceneLine& sl : scene.lines) {
    auto seg = clip(sl.line, v);
    if (!seg) continue;
    os << "<line x1=\"" << num(f.x(seg->first.b)) << "\" y1=\"" << num(f.y(seg->first.w)) << "\" x2=\""
       << num(f.x(seg->second.b)) << "\" y2=\"" << num(f.y(seg->second.w))
       << "\" stroke=\"#b03030\" stroke-width=\"1.2\"/>\n";
    if (!sl.label.empty()) {
      os << "<text x=\"" << num(f.x(seg->second.b) - 4) << "\" y=\"" << num(f.y(seg->second.w) + 14)
         << "\" font-size=\"12\" text-anchor=\"end\" fill=\"#b03030\">" << escape(sl.label) << "</text>\n";
    }
  }
  for (const ScenePoint& p : scene.points) {
    if (p.at.b < v.b_lo || p.at.b > v.b_hi || p.at.w < v.w_lo || p.at.w > v.w_hi) continue;
    os << "<circle cx=\"" << num(f.x(p.at.b)) << "\" cy=\"" << num(f.y(p.at.w)) << "\" r=\"3\" fill=\"black\"/>\n";
    if (!p.label.empty()) {
      os << "<text x=\"" << num(f.x(p.at.b) + 5) << "\" y=\"" << num(f.y(p.at.w) - 5) << "\" font-size=\"12\">"
         << escape(p.label) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

void write_svg(const Scene& scene, const std::string& path) {
  std::string text = render_svg(scene);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Precondition, "cannot write " + path);
  out << text;
}

}  // namespace wallcross
