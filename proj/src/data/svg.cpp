// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/data/svg.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace ink {

namespace {

std::string number(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

constexpr const char* kHeader =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" ";

}  // namespace

std::string render_svg(const InkSample& sample) {
  if (sample.points.empty()) {
    return std::string(kHeader) + "viewBox=\"0 0 1 1\" width=\"1\" height=\"1\"/>\n";
  }

  std::vector<std::vector<const StrokePoint*>> runs(1);
  for (const StrokePoint& p : sample.points) {
    runs.back().push_back(&p);
    if (p.pen == 1) runs.emplace_back();
  }
  if (runs.back().empty()) runs.pop_back();

  double min_u = sample.points[0].u, max_u = min_u;
  double min_v = sample.points[0].v, max_v = min_v;
  for (const StrokePoint& p : sample.points) {
    min_u = std::min<double>(min_u, p.u);
    max_u = std::max<double>(max_u, p.u);
    min_v = std::min<double>(min_v, p.v);
    max_v = std::max<double>(max_v, p.v);
  }
  const double width = std::max(max_u - min_u, 1.0);
  const double height = std::max(max_v - min_v, 1.0);
  const double mu = 0.05 * width;
  const double mv = 0.05 * height;

  std::string out = kHeader;
  out += "viewBox=\"" + number(min_u - mu) + " " + number(min_v - mv) + " " +
         number(width + 2 * mu) + " " + number(height + 2 * mv) + "\" width=\"" +
         number(width + 2 * mu) + "\" height=\"" + number(height + 2 * mv) + "\">\n";
  for (const auto& run : runs) {
    out += "  <polyline points=\"";
    for (std::size_t i = 0; i < run.size(); ++i) {
      if (i > 0) out += ' ';
      out += number(run[i]->u) + "," + number(run[i]->v);
    }
    out +=
        "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\" "
        "stroke-linejoin=\"round\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ink
