#include "geocoreset/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "geocoreset/diameter.hpp"

namespace geocoreset {

namespace {

const char* kind_color(SelKind k) {
  switch (k) {
    case SelKind::DiameterEndpoint: return "#000000";
    case SelKind::R: return "#d62728";
    case SelKind::X: return "#ff7f0e";
    case SelKind::Alpha: return "#9467bd";
    case SelKind::F: return "#1f77b4";
    case SelKind::L: return "#17becf";
    case SelKind::BCone: return "#8c564b";
  }
  return "#333333";
}

struct Canvas {
  double x0 = 0, y0 = 0, scale = 1, height = 0, margin = 20;
  double X(double x) const { return (x - x0) * scale + margin; }
  double Y(double y) const { return height - ((y - y0) * scale + margin); }
};

} // namespace

std::string render_svg(const SimplePolygon& poly, const std::vector<Point>& P,
                       const Coreset* coreset, const SvgQuery* query) {
  double x0 = poly.vertex(0).x, x1 = x0, y0 = poly.vertex(0).y, y1 = y0;
  for (const Point& v : poly.vertices()) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
  Canvas cv;
  cv.x0 = x0;
  cv.y0 = y0;
  cv.scale = 800.0 / std::max(w, h);
  double width_px = w * cv.scale + 2 * cv.margin;
  cv.height = h * cv.scale + 2 * cv.margin;

  std::string s;
  char buf[512];
  auto add = [&](const char* f, auto... a) {
    std::snprintf(buf, sizeof buf, f, a...);
    s += buf;
  };
  auto point_list = [&](const std::vector<Point>& vs) {
    std::string attr;
    char b[64];
    for (Point p : vs) {
      std::snprintf(b, sizeof b, "%.4f,%.4f ", cv.X(p.x), cv.Y(p.y));
      attr += b;
    }
    if (!attr.empty()) attr.pop_back();
    return attr;
  };
  auto ring_path = [&](const std::vector<Point>& vs) {
    std::string d;
    char b[64];
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::snprintf(b, sizeof b, "%c%.4f %.4f ", i == 0 ? 'M' : 'L', cv.X(vs[i].x), cv.Y(vs[i].y));
      d += b;
    }
    d += "Z";
    return d;
  };

  add("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 %.1f %.1f\" "
      "width=\"%.0f\" height=\"%.0f\">\n",
      width_px, cv.height, width_px, cv.height);

  s += "<g id=\"polygon\">\n";
  add("  <path d=\"%s\" fill=\"#faf9f5\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n",
      ring_path(poly.vertices()).c_str());
  s += "</g>\n";

  // side components that are pockets of some piece, shaded by side
  s += "<g id=\"pockets\">\n";
  if (coreset) {
    std::set<int> done;
    for (const Piece& piece : coreset->pieces) {
      PieceClassification cls =
          pocket_and_edge_classify(coreset->sides, coreset->diam.gamma, piece);
      for (int ci : cls.pockets) {
        if (!done.insert(ci).second) continue;
        const SideComponent& comp = coreset->sides.components[static_cast<std::size_t>(ci)];
        add("  <path d=\"%s\" fill=\"%s\" fill-opacity=\"0.55\" stroke=\"none\"/>\n",
            ring_path(comp.ring).c_str(), comp.side == 1 ? "#ffe9a8" : "#c9e4f6");
      }
    }
  }
  s += "</g>\n";

  s += "<g id=\"pieces\">\n";
  if (coreset) {
    for (const Piece& piece : coreset->pieces) {
      add("  <polyline points=\"%s\" fill=\"none\" stroke=\"%s\" stroke-width=\"2.5\"/>\n",
          point_list(piece.chain).c_str(), piece.index % 2 == 0 ? "#2ca02c" : "#98df8a");
    }
    for (const Piece& piece : coreset->pieces)
      add("  <circle cx=\"%.4f\" cy=\"%.4f\" r=\"3\" fill=\"#333333\"/>\n", cv.X(piece.start().x),
          cv.Y(piece.start().y));
    if (!coreset->pieces.empty())
      add("  <circle cx=\"%.4f\" cy=\"%.4f\" r=\"3\" fill=\"#333333\"/>\n",
          cv.X(coreset->pieces.back().end().x), cv.Y(coreset->pieces.back().end().y));
  }
  s += "</g>\n";

  s += "<g id=\"bset\">\n";
  if (coreset) {
    for (const Segment& seg : coreset->bset.segments)
      add("  <line x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\" stroke=\"#e377c2\" "
          "stroke-width=\"1.8\" stroke-dasharray=\"6 4\"/>\n",
          cv.X(seg.a.x), cv.Y(seg.a.y), cv.X(seg.b.x), cv.Y(seg.b.y));
  }
  s += "</g>\n";

  s += "<g id=\"gamma\">\n";
  if (coreset) {
    add("  <polyline points=\"%s\" fill=\"none\" stroke=\"#111111\" stroke-width=\"4\"/>\n",
        point_list(coreset->diam.gamma.vertices).c_str());
    for (const Segment* ext : {&coreset->star.s1, &coreset->star.s2}) {
      if (ext->length() <= kDistTol) continue;
      add("  <line x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\" stroke=\"#555555\" "
          "stroke-width=\"2\" stroke-dasharray=\"4 4\"/>\n",
          cv.X(ext->a.x), cv.Y(ext->a.y), cv.X(ext->b.x), cv.Y(ext->b.y));
    }
  }
  s += "</g>\n";

  s += "<g id=\"points\">\n";
  for (Point p : P)
    add("  <circle cx=\"%.4f\" cy=\"%.4f\" r=\"2.5\" fill=\"#8a8a8a\"/>\n", cv.X(p.x), cv.Y(p.y));
  s += "</g>\n";

  s += "<g id=\"coreset\">\n";
  if (coreset) {
    for (const CoresetPoint& e : coreset->log) {
      Point p = P[static_cast<std::size_t>(e.point)];
      add("  <circle cx=\"%.4f\" cy=\"%.4f\" r=\"4\" fill=\"%s\" stroke=\"#ffffff\" "
          "stroke-width=\"1\"><title>%s #%d</title></circle>\n",
          cv.X(p.x), cv.Y(p.y), kind_color(e.kind), e.tag().c_str(), e.point);
    }
  }
  s += "</g>\n";

  s += "<g id=\"query\">\n";
  if (query) {
    add("  <polyline points=\"%s\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2.5\"/>\n",
        point_list(query->exact.vertices).c_str());
    add("  <polyline points=\"%s\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"2.5\" "
        "stroke-dasharray=\"7 4\"/>\n",
        point_list(query->approx.vertices).c_str());
    add("  <circle cx=\"%.4f\" cy=\"%.4f\" r=\"4.5\" fill=\"none\" stroke=\"#000000\" "
        "stroke-width=\"2\"/>\n",
        cv.X(query->q.x), cv.Y(query->q.y));
  }
  s += "</g>\n";

  s += "</svg>\n";
  return s;
}

} // namespace geocoreset
