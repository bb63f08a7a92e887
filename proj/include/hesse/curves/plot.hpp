#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hesse/algebra/errors.hpp"
#include "hesse/curves/cubic_form.hpp"

namespace hesse {

struct Window {
  double xmin = -4, xmax = 4, ymin = -4, ymax = 4;
};

enum class PlotFormat { Svg, Csv };

struct PlotLayer {
  RealCubicForm cubic;
  std::string name;
  std::string color = "#000000";
};

struct PlotSpec {
  std::vector<PlotLayer> layers;
  Window window;
  int resolution = 512;
  PlotFormat format = PlotFormat::Svg;

  void validate() const {
    if (!(window.xmin < window.xmax) || !(window.ymin < window.ymax)) {
      throw Error(ErrorKind::InvalidArgument, "window must satisfy xmin < xmax and ymin < ymax");
    }
    if (resolution < 16 || resolution > 4096) throw Error(ErrorKind::InvalidArgument, "resolution must lie in [16, 4096]");
    if (layers.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to plot");
  }
};

using Polyline = std::vector<std::array<double, 2>>;

/// Connected pieces of f(x, y, 1) = 0 inside the window.
struct Contour {
  std::vector<Polyline> pieces;
  std::size_t components() const { return pieces.size(); }
};

/// Marching squares on a resolution x resolution grid with linear
/// interpolation along cell edges. Saddle cells are resolved by the value
/// at the cell centre. Vertex values of exactly 0 count as positive.
inline Contour marching_squares(const RealCubicForm& f, const Window& w, int res) {
  const int n = res;
  const double dx = (w.xmax - w.xmin) / n, dy = (w.ymax - w.ymin) / n;
  auto X = [&](int i) { return w.xmin + dx * i; };
  auto Y = [&](int j) { return w.ymin + dy * j; };
  auto F = [&](double x, double y) { return f(x, y, 1.0); };
  std::vector<double> v(static_cast<std::size_t>(n + 1) * (n + 1));
  auto at = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(j) * (n + 1) + i]; };
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) at(i, j) = F(X(i), Y(j));
  }
  // Edge ids: horizontal edge from (i,j) to (i+1,j) is 2*(j*(n+1)+i), vertical
  // edge from (i,j) to (i,j+1) is 2*(j*(n+1)+i)+1.
  auto hid = [&](int i, int j) { return 2L * (static_cast<long>(j) * (n + 1) + i); };
  auto vid = [&](int i, int j) { return 2L * (static_cast<long>(j) * (n + 1) + i) + 1; };
  std::map<long, std::array<double, 2>> point;
  std::map<long, std::vector<long>> adj;
  auto cross = [](double a, double b) { return a / (a - b); };
  auto edge_point = [&](long id) {
    auto it = point.find(id);
    if (it != point.end()) return;
    const long base = id / 2;
    const int i = static_cast<int>(base % (n + 1)), j = static_cast<int>(base / (n + 1));
    if (id % 2 == 0) {
      const double t = cross(at(i, j), at(i + 1, j));
      point[id] = {X(i) + t * dx, Y(j)};
    } else {
      const double t = cross(at(i, j), at(i, j + 1));
      point[id] = {X(i), Y(j) + t * dy};
    }
  };
  auto link = [&](long a, long b) {
    edge_point(a);
    edge_point(b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const bool s0 = at(i, j) >= 0, s1 = at(i + 1, j) >= 0, s2 = at(i + 1, j + 1) >= 0, s3 = at(i, j + 1) >= 0;
      const int mask = s0 | (s1 << 1) | (s2 << 2) | (s3 << 3);
      if (mask == 0 || mask == 15) continue;
      const long bottom = hid(i, j), right = vid(i + 1, j), top = hid(i, j + 1), left = vid(i, j);
      std::vector<long> crossing;
      if (s0 != s1) crossing.push_back(bottom);
      if (s1 != s2) crossing.push_back(right);
      if (s2 != s3) crossing.push_back(top);
      if (s3 != s0) crossing.push_back(left);
      if (crossing.size() == 2) {
        link(crossing[0], crossing[1]);
        continue;
      }
      // Saddle: corners 0 and 2 share a sign, 1 and 3 the other.
      const bool centre = F(X(i) + dx / 2, Y(j) + dy / 2) >= 0;
      if (centre == s0) {
        // Corners 0, 2 connected through the centre: cut off corners 1 and 3.
        link(bottom, right);
        link(top, left);
      } else {
        link(left, bottom);
        link(right, top);
      }
    }
  }
  Contour out;
  std::map<long, bool> used;
  auto walk = [&](long start) {
    Polyline line;
    long prev = -1, cur = start;
    while (true) {
      used[cur] = true;
      line.push_back(point[cur]);
      long next = -1;
      for (long nb : adj[cur]) {
        if (nb != prev && !used[nb]) {
          next = nb;
          break;
        }
      }
      if (next < 0) {
        // Close loops explicitly.
        for (long nb : adj[cur]) {
          if (nb == start && line.size() > 2) line.push_back(point[start]);
        }
        break;
      }
      prev = cur;
      cur = next;
    }
    return line;
  };
  // Open pieces first (start at degree-1 nodes), then closed loops.
  for (const auto& [id, nbs] : adj) {
    if (nbs.size() == 1 && !used[id]) out.pieces.push_back(walk(id));
  }
  for (const auto& [id, nbs] : adj) {
    if (!used[id]) out.pieces.push_back(walk(id));
  }
  return out;
}

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace detail

/// SVG with one <g> per layer and one <path> per contour piece; y grows
/// upward in plot coordinates.
inline std::string render_svg(const PlotSpec& spec, const std::vector<Contour>& contours) {
  const Window& w = spec.window;
  const double size = 512.0;
  const double sx = size / (w.xmax - w.xmin), sy = size / (w.ymax - w.ymin);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t l = 0; l < contours.size(); ++l) {
    os << "<g id=\"" << spec.layers[l].name << "\" fill=\"none\" stroke=\"" << spec.layers[l].color
       << "\" stroke-width=\"1.5\">\n";
    for (const auto& piece : contours[l].pieces) {
      os << "<path d=\"";
      for (std::size_t k = 0; k < piece.size(); ++k) {
        os << (k ? " L" : "M") << detail::fmt((piece[k][0] - w.xmin) * sx) << " "
           << detail::fmt((w.ymax - piece[k][1]) * sy);
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

/// CSV rows layer,component,x,y.
inline std::string render_csv(const PlotSpec& spec, const std::vector<Contour>& contours) {
  std::ostringstream os;
  os << "layer,component,x,y\n";
  for (std::size_t l = 0; l < contours.size(); ++l) {
    for (std::size_t c = 0; c < contours[l].pieces.size(); ++c) {
      for (const auto& p : contours[l].pieces[c]) {
        os << spec.layers[l].name << "," << c << "," << detail::fmt(p[0]) << "," << detail::fmt(p[1]) << "\n";
      }
    }
  }
  return os.str();
}

struct PlotResult {
  std::vector<Contour> contours;
  std::string text;
  bool empty() const {
    for (const auto& c : contours) {
      if (!c.pieces.empty()) return false;
    }
    return true;
  }
};

inline PlotResult plot(const PlotSpec& spec) {
  spec.validate();
  PlotResult r;
  for (const auto& layer : spec.layers) r.contours.push_back(marching_squares(layer.cubic, spec.window, spec.resolution));
  r.text = spec.format == PlotFormat::Svg ? render_svg(spec, r.contours) : render_csv(spec, r.contours);
  return r;
}

}  // namespace hesse
