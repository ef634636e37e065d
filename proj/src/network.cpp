#include "tristeiner/network.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "tristeiner/fermat.hpp"

namespace tristeiner {

EdgeMask side_mask(VertexId u, VertexId v) {
  const int lo = std::min(index(u), index(v));
  const int hi = std::max(index(u), index(v));
  if (lo == hi) throw std::invalid_argument("side_mask: identical vertices");
  if (lo == 0 && hi == 1) return kSideAB;
  if (lo == 1 && hi == 2) return kSideBC;
  return kSideCA;
}

Network::Network(TerminalTriangle triangle, const std::vector<Point>& anchors,
                 std::vector<Edge> edges)
    : triangle_(std::move(triangle)) {
  nodes_.reserve(3 + anchors.size());
  for (int i = 0; i < 3; ++i) {
    nodes_.push_back({i, NodeKind::Terminal, vertex(i), triangle_.vertices()[i]});
  }
  for (const Point& p : anchors) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("Network: anchor coordinates must be finite");
    }
    nodes_.push_back({static_cast<int>(nodes_.size()), NodeKind::Anchor, std::nullopt, p});
  }
  const int n = static_cast<int>(nodes_.size());
  for (Edge& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n) {
      throw std::invalid_argument("Network: edge references a missing node");
    }
    if (e.first == e.second) throw std::invalid_argument("Network: self-loop");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("Network: duplicate edge");
  }
  edges_ = std::move(edges);
}

Network Network::from_sides(const TerminalTriangle& t, EdgeMask mask) {
  std::vector<Edge> edges;
  if (mask & kSideAB) edges.emplace_back(0, 1);
  if (mask & kSideBC) edges.emplace_back(1, 2);
  if (mask & kSideCA) edges.emplace_back(0, 2);
  return Network(t, {}, std::move(edges));
}

std::vector<Point> Network::anchors() const {
  std::vector<Point> out;
  for (std::size_t i = 3; i < nodes_.size(); ++i) out.push_back(nodes_[i].pos);
  return out;
}

int Network::degree(int node) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [node](const Edge& e) {
    return e.first == node || e.second == node;
  }));
}

double Network::edge_length(const Edge& e) const {
  return distance(nodes_[e.first].pos, nodes_[e.second].pos);
}

bool Network::has_edge(int u, int v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  return std::find(edges_.begin(), edges_.end(), key) != edges_.end();
}

double total_length(const Network& n) {
  double sum = 0.0;
  for (const Edge& e : n.edges()) sum += n.edge_length(e);
  return sum;
}

double default_penalty(const TerminalTriangle& t) { return 1e9 * t.perimeter(); }

TerminalPaths terminal_paths(const Network& n) {
  const int count = static_cast<int>(n.nodes().size());
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::vector<std::vector<std::pair<int, double>>> adj(count);
  for (const Edge& e : n.edges()) {
    const double w = n.edge_length(e);
    adj[e.first].emplace_back(e.second, w);
    adj[e.second].emplace_back(e.first, w);
  }

  TerminalPaths paths;
  for (int source = 0; source < 3; ++source) {
    auto& dist = paths.dist[source];
    auto& pred = paths.pred[source];
    dist.assign(count, kInf);
    pred.assign(count, -1);
    std::vector<bool> settled(count, false);
    dist[source] = 0.0;
    // Dense label-setting; networks have at most a handful of nodes.
    for (int round = 0; round < count; ++round) {
      int u = -1;
      for (int v = 0; v < count; ++v) {
        if (!settled[v] && dist[v] < kInf && (u < 0 || dist[v] < dist[u])) u = v;
      }
      if (u < 0) break;
      settled[u] = true;
      for (const auto& [v, w] : adj[u]) {
        if (dist[u] + w < dist[v]) {
          dist[v] = dist[u] + w;
          pred[v] = u;
        }
      }
    }
  }
  return paths;
}

Objective evaluate(const Network& n, std::optional<double> penalty) {
  const double m = penalty.value_or(default_penalty(n.triangle()));
  const TerminalPaths paths = terminal_paths(n);
  auto pair_distance = [&](int x, int y) {
    const double d = paths.dist[x][y];
    return std::isfinite(d) ? d : m;
  };
  Objective obj;
  obj.d_ab = pair_distance(0, 1);
  obj.d_bc = pair_distance(1, 2);
  obj.d_ac = pair_distance(0, 2);
  obj.j = obj.d_ab + obj.d_bc + obj.d_ac;
  return obj;
}

std::string_view violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::Degree: return "degree";
    case ViolationKind::Interiority: return "interiority";
    case ViolationKind::Stem: return "stem";
    case ViolationKind::Bisector: return "bisector";
    case ViolationKind::AnchorAngle: return "anchor_angle";
    case ViolationKind::SteinerJunction: return "steiner_junction";
    case ViolationKind::Equilateral: return "equilateral";
    case ViolationKind::Centroid: return "centroid";
  }
  return "unknown";
}

std::vector<Violation> validate(const Network& n, double tol) {
  std::vector<Violation> out;
  const auto& nodes = n.nodes();
  const int count = static_cast<int>(nodes.size());
  const TerminalPaths paths = terminal_paths(n);

  // How many terminal-pair shortest paths run through each edge.
  std::vector<std::vector<int>> usage(count, std::vector<int>(count, 0));
  for (int x = 0; x < 3; ++x) {
    for (int y = x + 1; y < 3; ++y) {
      if (!std::isfinite(paths.dist[x][y])) continue;
      for (int v = y; paths.pred[x][v] >= 0; v = paths.pred[x][v]) {
        const int u = paths.pred[x][v];
        ++usage[u][v];
        ++usage[v][u];
      }
    }
  }

  for (int k = 3; k < count; ++k) {
    const Point pos = nodes[k].pos;
    std::vector<int> nbrs;
    for (const Edge& e : n.edges()) {
      if (e.first == k) nbrs.push_back(e.second);
      if (e.second == k) nbrs.push_back(e.first);
    }
    if (nbrs.size() != 3) {
      out.push_back({ViolationKind::Degree, k, static_cast<double>(nbrs.size()),
                     "anchor degree " + std::to_string(nbrs.size()) + " != 3"});
      continue;
    }
    const auto bary = n.triangle().barycentric(pos);
    const double min_bary = std::min({bary[0], bary[1], bary[2]});
    if (min_bary <= 1e-9) {
      out.push_back({ViolationKind::Interiority, k, min_bary, "anchor not strictly interior"});
    }

    bool degenerate = false;
    for (int nb : nbrs) degenerate = degenerate || distance(nodes[nb].pos, pos) < 1e-12;
    if (degenerate) {
      out.push_back({ViolationKind::Degree, k, 0.0, "anchor has a zero-length edge"});
      continue;
    }

    const int shared = static_cast<int>(
        std::count_if(nbrs.begin(), nbrs.end(), [&](int nb) { return usage[k][nb] == 2; }));
    if (shared == 3) {
      for (int i = 0; i < 3; ++i) {
        const double a = angle_at(pos, nodes[nbrs[i]].pos, nodes[nbrs[(i + 1) % 3]].pos);
        if (std::abs(a - 2.0 * kPi / 3.0) > tol) {
          out.push_back({ViolationKind::SteinerJunction, k, a, "junction angle != 2pi/3"});
          break;
        }
      }
      continue;
    }
    const bool single_stem =
        shared == 1 && std::all_of(nbrs.begin(), nbrs.end(), [&](int nb) {
          return usage[k][nb] == 2 || usage[k][nb] == 1;
        });
    if (!single_stem) {
      out.push_back({ViolationKind::Stem, k, static_cast<double>(shared),
                     "no unique edge carrying two terminal pairs"});
      continue;
    }
    const auto stem_it =
        std::find_if(nbrs.begin(), nbrs.end(), [&](int nb) { return usage[k][nb] == 2; });
    const int stem = *stem_it;
    std::vector<int> rest;
    for (int nb : nbrs) {
      if (nb != stem) rest.push_back(nb);
    }
    const Point p1 = nodes[rest[0]].pos;
    const Point p2 = nodes[rest[1]].pos;
    const double residual = bisector_residual(nodes[stem].pos, pos, p1, p2);
    if (std::abs(residual) > tol) {
      out.push_back({ViolationKind::Bisector, k, residual, "stem does not bisect"});
    }
    const double inner = angle_at(pos, p1, p2);
    if (inner > kPi / 3.0 + tol) {
      out.push_back({ViolationKind::AnchorAngle, k, inner, "anchor angle exceeds pi/3"});
    }
  }

  if (n.anchor_count() == 3) {
    const auto anchors = n.anchors();
    const std::array<double, 3> sides{distance(anchors[0], anchors[1]),
                                      distance(anchors[1], anchors[2]),
                                      distance(anchors[2], anchors[0])};
    const double spread = *std::max_element(sides.begin(), sides.end()) -
                          *std::min_element(sides.begin(), sides.end());
    if (spread > tol) {
      out.push_back({ViolationKind::Equilateral, -1, spread, "anchor triangle not equilateral"});
    }
    if (has_interior_steiner_point(n.triangle())) {
      const Point centroid = (1.0 / 3.0) * (anchors[0] + anchors[1] + anchors[2]);
      const double off = distance(centroid, steiner_info(n.triangle()).point);
      if (off > tol) {
        out.push_back({ViolationKind::Centroid, -1, off, "anchor centroid off the Steiner point"});
      }
    }
  }
  return out;
}

Network collapse(const Network& n, double tol) {
  const auto& nodes = n.nodes();
  const int count = static_cast<int>(nodes.size());
  std::vector<int> rep(count);
  for (int i = 0; i < count; ++i) rep[i] = i;

  for (int k = 3; k < count; ++k) {
    int target = -1;
    double best = tol;
    for (int i = 0; i < k; ++i) {
      if (rep[i] != i) continue;
      const double d = distance(nodes[k].pos, nodes[i].pos);
      if (d <= best) {
        best = d;
        target = i;
      }
    }
    if (target >= 0) rep[k] = target;
  }

  std::vector<Edge> edges;
  for (const Edge& e : n.edges()) {
    int u = rep[e.first];
    int v = rep[e.second];
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (std::find(edges.begin(), edges.end(), Edge{u, v}) == edges.end()) edges.emplace_back(u, v);
  }

  std::vector<bool> alive(count, false);
  for (int i = 0; i < count; ++i) alive[i] = rep[i] == i;

  auto incident = [&](int k) {
    std::vector<int> nbrs;
    for (const Edge& e : edges) {
      if (e.first == k) nbrs.push_back(e.second);
      if (e.second == k) nbrs.push_back(e.first);
    }
    return nbrs;
  };
  auto drop_edges_of = [&](int k) {
    std::erase_if(edges, [k](const Edge& e) { return e.first == k || e.second == k; });
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 3; k < count; ++k) {
      if (!alive[k]) continue;
      const auto nbrs = incident(k);
      if (nbrs.size() <= 1) {
        drop_edges_of(k);
        alive[k] = false;
        changed = true;
      } else if (nbrs.size() == 2) {
        const Point p = nodes[nbrs[0]].pos;
        const Point q = nodes[nbrs[1]].pos;
        const double detour = distance(p, nodes[k].pos) + distance(nodes[k].pos, q) - distance(p, q);
        if (detour <= tol) {
          drop_edges_of(k);
          alive[k] = false;
          const Edge direct{std::min(nbrs[0], nbrs[1]), std::max(nbrs[0], nbrs[1])};
          if (std::find(edges.begin(), edges.end(), direct) == edges.end()) edges.push_back(direct);
          changed = true;
        }
      }
    }
  }

  std::vector<int> new_id(count, -1);
  std::vector<Point> anchors;
  for (int i = 0; i < 3; ++i) new_id[i] = i;
  for (int k = 3; k < count; ++k) {
    if (!alive[k]) continue;
    new_id[k] = 3 + static_cast<int>(anchors.size());
    anchors.push_back(nodes[k].pos);
  }
  for (Edge& e : edges) e = {new_id[e.first], new_id[e.second]};
  return Network(n.triangle(), anchors, std::move(edges));
}

}  // namespace tristeiner
