#include "tristeiner/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace tristeiner::svg {

namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 36.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

// Maps a data rectangle onto the canvas with y pointing up.
struct Frame {
  double x0, y0, x1, y1;
  double width = kCanvas, height = kCanvas;

  double px(double x) const { return kMargin + (x - x0) / (x1 - x0) * (width - 2 * kMargin); }
  double py(double y) const { return height - kMargin - (y - y0) / (y1 - y0) * (height - 2 * kMargin); }
};

std::string header(double w, double h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string render_network(const Network& n, const std::string& caption) {
  const auto& v = n.triangle().vertices();
  double x0 = v[0].x, x1 = v[0].x, y0 = v[0].y, y1 = v[0].y;
  for (const Point& p : v) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  // Equal scale on both axes.
  const double span = std::max(x1 - x0, y1 - y0);
  const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
  const Frame f{cx - 0.5 * span, cy - 0.5 * span, cx + 0.5 * span, cy + 0.5 * span};

  std::string out = header(kCanvas, kCanvas);
  out += "<polygon points=\"";
  for (const Point& p : v) out += num(f.px(p.x)) + "," + num(f.py(p.y)) + " ";
  out += "\" fill=\"none\" stroke=\"#9a9a9a\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";

  const auto& nodes = n.nodes();
  for (const Edge& e : n.edges()) {
    const Point a = nodes[e.first].pos, b = nodes[e.second].pos;
    out += "<line x1=\"" + num(f.px(a.x)) + "\" y1=\"" + num(f.py(a.y)) + "\" x2=\"" +
           num(f.px(b.x)) + "\" y2=\"" + num(f.py(b.y)) +
           "\" stroke=\"#1d3557\" stroke-width=\"2\" stroke-linecap=\"round\"/>\n";
  }
  for (const Node& node : nodes) {
    const bool terminal = node.kind == NodeKind::Terminal;
    out += "<circle cx=\"" + num(f.px(node.pos.x)) + "\" cy=\"" + num(f.py(node.pos.y)) +
           "\" r=\"" + (terminal ? "6" : "4.5") + "\" fill=\"" + (terminal ? "black" : "#d62828") +
           "\"/>\n";
    if (terminal) {
      out += "<text x=\"" + num(f.px(node.pos.x) + 8) + "\" y=\"" + num(f.py(node.pos.y) - 8) +
             "\" font-family=\"sans-serif\" font-size=\"14\">" +
             std::string(vertex_name(*node.terminal)) + "</text>\n";
    }
  }
  if (!caption.empty()) {
    out += "<text x=\"" + num(kMargin) + "\" y=\"" + num(kCanvas - 10) +
           "\" font-family=\"sans-serif\" font-size=\"13\">" + escape(caption) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_curve(const EvolutionTrace& trace) {
  const Thresholds& th = trace.thresholds;
  // Below the Steiner tree length J carries the disconnection penalty and
  // would flatten the plot, so only the connected range is drawn.
  std::vector<const SweepSample*> pts;
  for (const SweepSample& s : trace.samples) {
    if (s.l >= th.l_st) pts.push_back(&s);
  }
  const double width = 640.0, height = 420.0;
  std::string out = header(width, height);
  if (pts.size() < 2) {
    out += "<text x=\"40\" y=\"40\" font-family=\"sans-serif\" font-size=\"13\">"
           "no samples at or above the Steiner tree length</text>\n</svg>\n";
    return out;
  }
  double l0 = pts.front()->l, l1 = pts.back()->l;
  double j0 = pts.front()->j, j1 = pts.front()->j;
  for (const SweepSample* s : pts) {
    j0 = std::min(j0, s->j);
    j1 = std::max(j1, s->j);
  }
  if (j1 - j0 < 1e-12) j1 = j0 + 1.0;
  Frame f{l0, j0, l1, j1, width, height};

  out += "<line x1=\"" + num(f.px(l0)) + "\" y1=\"" + num(f.py(j0)) + "\" x2=\"" + num(f.px(l1)) +
         "\" y2=\"" + num(f.py(j0)) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + num(f.px(l0)) + "\" y1=\"" + num(f.py(j0)) + "\" x2=\"" + num(f.px(l0)) +
         "\" y2=\"" + num(f.py(j1)) + "\" stroke=\"black\"/>\n";

  struct Mark {
    const char* label;
    double l;
  };
  std::vector<Mark> marks{{"L_ST", th.l_st}};
  if (th.l1) marks.push_back({"L1", *th.l1});
  marks.push_back({"L2", th.l2});
  marks.push_back({"L3", th.l3});
  for (const Mark& m : marks) {
    if (m.l < l0 || m.l > l1) continue;
    out += "<line x1=\"" + num(f.px(m.l)) + "\" y1=\"" + num(f.py(j0)) + "\" x2=\"" +
           num(f.px(m.l)) + "\" y2=\"" + num(f.py(j1)) +
           "\" stroke=\"#9a9a9a\" stroke-dasharray=\"4,4\"/>\n";
    out += "<text x=\"" + num(f.px(m.l) + 3) + "\" y=\"" + num(kMargin - 8) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + m.label + "</text>\n";
  }

  out += "<polyline fill=\"none\" stroke=\"#1d3557\" stroke-width=\"2\" points=\"";
  for (const SweepSample* s : pts) out += num(f.px(s->l)) + "," + num(f.py(s->j)) + " ";
  out += "\"/>\n";

  auto label = [&](double x, double y, const std::string& text) {
    out += "<text x=\"" + num(x) + "\" y=\"" + num(y) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + text + "</text>\n";
  };
  label(f.px(l0), height - 12, "L=" + num(l0));
  label(f.px(l1) - 60, height - 12, "L=" + num(l1));
  label(4, f.py(j1) + 4, "J=" + num(j1));
  label(4, f.py(j0) - 4, "J=" + num(j0));
  out += "</svg>\n";
  return out;
}

}  // namespace tristeiner::svg
