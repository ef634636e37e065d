#include "tristeiner/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tristeiner::io {

using json = nlohmann::ordered_json;

namespace {

double require_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
  return v;
}

Point parse_point(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + " must be [x, y]");
  return {require_number(j[0], what), require_number(j[1], what)};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string sides_name(EdgeMask mask) {
  std::string out;
  if (mask & kSideAB) out += out.empty() ? "AB" : ",AB";
  if (mask & kSideBC) out += out.empty() ? "BC" : ",BC";
  if (mask & kSideCA) out += out.empty() ? "CA" : ",CA";
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path.string());
  out << contents;
  if (!out) throw ParseError("failed writing " + path.string());
}

ProblemSpec parse_problem(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("problem must be a JSON object");
  if (!doc.contains("terminals")) throw ParseError("missing \"terminals\"");
  const json& terms = doc["terminals"];
  if (!terms.is_array() || terms.size() != 3) {
    throw ParseError("\"terminals\" must hold exactly three [x, y] pairs");
  }
  ProblemSpec spec{TerminalTriangle(parse_point(terms[0], "terminal"),
                                    parse_point(terms[1], "terminal"),
                                    parse_point(terms[2], "terminal")),
                   std::nullopt, std::nullopt};
  if (doc.contains("budget")) {
    spec.budget = require_number(doc["budget"], "budget");
    if (!(*spec.budget > 0.0)) throw ParseError("budget must be > 0");
  }
  if (doc.contains("penalty")) {
    spec.penalty = require_number(doc["penalty"], "penalty");
    if (!(*spec.penalty > 0.0)) throw ParseError("penalty must be > 0");
  }
  return spec;
}

ProblemSpec read_problem(const std::filesystem::path& path) {
  return parse_problem(read_file(path));
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string solution_document(double budget, const SolveResult& result, double penalty) {
  const Network& n = result.network;
  const Objective obj = evaluate(n, penalty);
  json doc;
  json terms = json::array();
  for (const Point& p : n.triangle().vertices()) terms.push_back({p.x, p.y});
  doc["terminals"] = terms;
  doc["budget"] = budget;
  doc["penalty"] = penalty;
  doc["phase"] = result.phase.tag();
  switch (result.phase.kind) {
    case PhaseKind::BelowTree:
      doc["sides"] = sides_name(result.phase.sides);
      break;
    case PhaseKind::TwoAnchor:
      doc["pinned"] = std::string(vertex_name(result.phase.pinned));
      break;
    case PhaseKind::OneAnchor:
      doc["pinned"] = json::array({std::string(vertex_name(result.phase.pinned_pair[0])),
                                   std::string(vertex_name(result.phase.pinned_pair[1]))});
      break;
    default:
      break;
  }
  doc["l_used"] = result.l_used;
  doc["j"] = obj.j;
  doc["slope"] = result.slope;
  doc["distances"] = {{"ab", obj.d_ab}, {"bc", obj.d_bc}, {"ac", obj.d_ac}};
  json nodes = json::array();
  for (const Node& node : n.nodes()) {
    json jn;
    jn["id"] = node.id;
    jn["kind"] = node.kind == NodeKind::Terminal ? "terminal" : "anchor";
    if (node.terminal) jn["terminal"] = std::string(vertex_name(*node.terminal));
    jn["x"] = node.pos.x;
    jn["y"] = node.pos.y;
    nodes.push_back(jn);
  }
  doc["nodes"] = nodes;
  json edges = json::array();
  for (const Edge& e : n.edges()) edges.push_back({e.first, e.second});
  doc["edges"] = edges;
  return doc.dump(2) + "\n";
}

StoredSolution parse_solution(const std::string& text) {
  const json doc = parse_json(text);
  try {
    const json& terms = doc.at("terminals");
    if (!terms.is_array() || terms.size() != 3) throw ParseError("bad \"terminals\"");
    const TerminalTriangle t(parse_point(terms[0], "terminal"), parse_point(terms[1], "terminal"),
                             parse_point(terms[2], "terminal"));
    std::vector<Point> anchors;
    for (const json& node : doc.at("nodes")) {
      if (node.at("kind").get<std::string>() == "anchor") {
        anchors.push_back({require_number(node.at("x"), "x"), require_number(node.at("y"), "y")});
      }
    }
    std::vector<Edge> edges;
    for (const json& e : doc.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    StoredSolution s{Network(t, anchors, std::move(edges)), 0.0, 0.0, {}, 0.0, 0.0, 0.0};
    s.budget = require_number(doc.at("budget"), "budget");
    s.penalty = require_number(doc.at("penalty"), "penalty");
    s.phase = doc.at("phase").get<std::string>();
    s.l_used = require_number(doc.at("l_used"), "l_used");
    s.j = require_number(doc.at("j"), "j");
    s.slope = require_number(doc.at("slope"), "slope");
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed solution: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed solution: ") + e.what());
  }
}

std::string sweep_table(const EvolutionTrace& trace) {
  std::string out = "l,j,phase,slope\n";
  for (const SweepSample& s : trace.samples) {
    out += format_real(s.l) + "," + format_real(s.j) + "," + s.phase.tag() + "," +
           format_real(s.slope) + "\n";
  }
  return out;
}

}  // namespace tristeiner::io
