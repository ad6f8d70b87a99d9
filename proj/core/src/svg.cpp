#include "rectrep/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace rectrep::svg {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string header(double width, double height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n" +
         "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" fill=\"white\"/>\n";
}

}  // namespace

std::string render_placement(const Placement& placement) {
  double xmin = to_double(placement.rect(0).xmin), xmax = to_double(placement.rect(0).xmax);
  double ymin = to_double(placement.rect(0).ymin), ymax = to_double(placement.rect(0).ymax);
  for (const Rect& r : placement.rects()) {
    xmin = std::min(xmin, to_double(r.xmin));
    xmax = std::max(xmax, to_double(r.xmax));
    ymin = std::min(ymin, to_double(r.ymin));
    ymax = std::max(ymax, to_double(r.ymax));
  }
  const double margin = 20.0;
  const double scale = 480.0 / std::max(xmax - xmin, ymax - ymin);
  const double width = (xmax - xmin) * scale + 2 * margin;
  const double height = (ymax - ymin) * scale + 2 * margin;

  std::string out = header(width, height);
  for (int i = 0; i < placement.size(); ++i) {
    const Rect& r = placement.rect(i);
    const double x0 = margin + (to_double(r.xmin) - xmin) * scale;
    const double x1 = margin + (to_double(r.xmax) - xmin) * scale;
    // SVG y grows downward.
    const double y0 = margin + (ymax - to_double(r.ymax)) * scale;
    const double y1 = margin + (ymax - to_double(r.ymin)) * scale;
    out += "<rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(x1 - x0) +
           "\" height=\"" + num(y1 - y0) +
           "\" fill=\"#e6e6e6\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num((y0 + y1) / 2) +
           "\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\" "
           "dominant-baseline=\"central\">" +
           std::to_string(i + 1) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_natural_embedding(const Permutation& perm) {
  const int n = perm.size();
  const double step = 50.0;
  const double margin = 30.0;
  const double size = (n - 1) * step + 2 * margin;
  auto px = [&](int i) { return margin + i * step; };
  auto py = [&](int i) { return margin + (n - 1 - perm(i)) * step; };

  std::string out = header(size, size);
  out +=
      "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"18\" refY=\"5\" "
      "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
      "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  for (const auto& [from, to] : perm_digraph(perm).arcs) {
    out += "<line x1=\"" + num(px(from)) + "\" y1=\"" + num(py(from)) + "\" x2=\"" +
           num(px(to)) + "\" y2=\"" + num(py(to)) +
           "\" stroke=\"black\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (int i = 0; i < n; ++i) {
    out += "<circle cx=\"" + num(px(i)) + "\" cy=\"" + num(py(i)) +
           "\" r=\"10\" fill=\"white\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(px(i)) + "\" y=\"" + num(py(i)) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
           "dominant-baseline=\"central\">" +
           std::to_string(i + 1) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace rectrep::svg
