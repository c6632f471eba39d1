#include "regmark/svg.hpp"

#include "regmark/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace regmark {

namespace {

double dbl(const Rational& r) {
  return boost::multiprecision::numerator(r).convert_to<double>() /
         boost::multiprecision::denominator(r).convert_to<double>();
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Box {
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  void include(double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
};

Box world_box(const Arrangement& a) {
  Box box;
  bool seeded = false;
  const auto seed = [&](double x, double y) {
    if (!seeded) {
      box.x0 = box.x1 = x;
      box.y0 = box.y1 = y;
      seeded = true;
    } else {
      box.include(x, y);
    }
  };
  if (!a.points.empty()) {
    for (const Point& p : a.points) seed(dbl(p.x), dbl(p.y));
  } else {
    for (std::size_t i = 0; i < a.lines.size(); ++i)
      for (std::size_t j = i + 1; j < a.lines.size(); ++j)
        if (const auto p = intersect(a.lines[i], a.lines[j]))
          seed(dbl(p->x), dbl(p->y));
    seed(0, 0);
    box.include(1, 1);
  }
  const double pad = 0.1 * std::max({box.width(), box.height(), 1.0});
  box.x0 -= pad;
  box.y0 -= pad;
  box.x1 += pad;
  box.y1 += pad;
  return box;
}

// Clips an infinite line to the box; false when it misses entirely.
bool clip_line(const Line& l, const Box& box, double& ax, double& ay, double& bx,
               double& by) {
  const double la = dbl(Rational(l.a)), lb = dbl(Rational(l.b)), lc = dbl(Rational(l.c));
  const double eps = 1e-9 * std::max({std::fabs(la), std::fabs(lb), 1.0});
  std::vector<std::pair<double, double>> hits;
  const auto accept = [&](double x, double y) {
    if (x < box.x0 - 1e-7 || x > box.x1 + 1e-7) return;
    if (y < box.y0 - 1e-7 || y > box.y1 + 1e-7) return;
    for (const auto& [hx, hy] : hits)
      if (std::fabs(hx - x) < 1e-7 && std::fabs(hy - y) < 1e-7) return;
    hits.emplace_back(x, y);
  };
  if (std::fabs(lb) > eps) {
    accept(box.x0, (lc - la * box.x0) / lb);
    accept(box.x1, (lc - la * box.x1) / lb);
  }
  if (std::fabs(la) > eps) {
    accept((lc - lb * box.y0) / la, box.y0);
    accept((lc - lb * box.y1) / la, box.y1);
  }
  if (hits.size() < 2) return false;
  ax = hits[0].first;
  ay = hits[0].second;
  bx = hits[1].first;
  by = hits[1].second;
  return true;
}

}  // namespace

std::string render_svg(const Arrangement& a, const RenderSpec& spec) {
  const Box box = world_box(a);
  const double scale =
      std::min(spec.canvas / box.width(), spec.canvas / box.height());
  const double ox = (spec.canvas - scale * box.width()) / 2.0;
  const double oy = (spec.canvas - scale * box.height()) / 2.0;
  const auto X = [&](double wx) { return ox + scale * (wx - box.x0); };
  const auto Y = [&](double wy) { return oy + scale * (box.y1 - wy); };  // y up

  const int total_h = spec.canvas + (spec.show_caption ? spec.caption_band : 0);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.canvas
     << "\" height=\"" << total_h << "\" viewBox=\"0 0 " << spec.canvas << " "
     << total_h << "\">\n";
  os << "<rect width=\"" << spec.canvas << "\" height=\"" << total_h
     << "\" fill=\"white\"/>\n";

  for (const Line& l : a.lines) {
    double ax, ay, bx, by;
    if (!clip_line(l, box, ax, ay, bx, by)) continue;
    os << "<line x1=\"" << num(X(ax)) << "\" y1=\"" << num(Y(ay)) << "\" x2=\""
       << num(X(bx)) << "\" y2=\"" << num(Y(by))
       << "\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
  }

  const auto centrexes = find_centrexes(a);
  for (const Point& p : a.points) {
    const bool central =
        std::find(centrexes.begin(), centrexes.end(), p) != centrexes.end();
    const double cx = X(dbl(p.x)), cy = Y(dbl(p.y));
    if (central)
      os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy)
         << "\" r=\"9\" fill=\"none\" stroke=\"#27e\" stroke-width=\"2\"/>\n";
    os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"4\" fill=\""
       << (central ? "#27e" : "#c33") << "\"/>\n";
  }

  if (spec.show_caption) {
    const SummaryTriple t = summary_triple(a);
    os << "<text x=\"12\" y=\"" << spec.canvas + spec.caption_band - 14
       << "\" font-family=\"monospace\" font-size=\"18\">" << to_string(t)
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void save_svg(const Arrangement& a, const std::string& path, const RenderSpec& spec) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << render_svg(a, spec);
}

}  // namespace regmark
