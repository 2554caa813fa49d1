#include "hitting/graph_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace hitting {

namespace {

using nlohmann::json;

std::string label_of(const json& value, const char* what) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw GraphError(std::string(what) + " must be a string or integer label");
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw GraphError(std::string("missing field '") + key + "'");
  return *it;
}

std::string quoted(const std::string& label) { return json(label).dump(); }

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

WeightedGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("malformed graph file: ") + e.what());
  }
  if (!doc.is_object()) throw GraphError("graph file must be a JSON object");

  GraphBuilder b;
  std::map<std::string, char> declared;
  const json& vertices = require(doc, "vertices");
  if (!vertices.is_array()) throw GraphError("'vertices' must be an array");
  for (const json& v : vertices) {
    auto label = label_of(v, "vertex");
    if (!declared.emplace(label, 1).second) throw GraphError("duplicate vertex '" + label + "'");
    b.add_vertex(label);
  }
  auto check_declared = [&](const std::string& label) {
    if (!declared.count(label)) throw GraphError("undeclared vertex '" + label + "'");
  };

  const json& edges = require(doc, "edges");
  if (!edges.is_array()) throw GraphError("'edges' must be an array");
  std::map<std::pair<std::string, std::string>, double> seen;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_number()) {
      throw GraphError("each edge must be a [u, v, weight] triple");
    }
    auto u = label_of(e[0], "edge endpoint");
    auto v = label_of(e[1], "edge endpoint");
    check_declared(u);
    check_declared(v);
    const double w = e[2].get<double>();
    if (!std::isfinite(w) || w < 0.0) throw GraphError("edge (" + u + ", " + v + ") has negative weight");
    auto key = label_less(v, u) ? std::pair(v, u) : std::pair(u, v);
    auto [it, fresh] = seen.emplace(key, w);
    if (!fresh) {
      if (it->second != w) throw GraphError("conflicting duplicate edge (" + u + ", " + v + ")");
      continue;
    }
    b.add_edge(u, v, w);
  }

  auto origin = label_of(require(doc, "origin"), "origin");
  check_declared(origin);
  b.set_origin(origin);
  const json& targets = require(doc, "targets");
  if (!targets.is_array() || targets.empty()) throw GraphError("'targets' must be a nonempty array");
  for (const json& t : targets) {
    auto label = label_of(t, "target");
    check_declared(label);
    b.add_target(label);
  }
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) throw GraphError("'metadata' must be an object");
    b.set_metadata(*it);
  }
  return b.build();
}

std::string serialize_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "{\n  \"vertices\": [";
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (x) out << ", ";
    out << quoted(g.label(x));
  }
  out << "],\n  \"edges\": [";
  bool first = true;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    for (const Arc& a : g.neighbors(x)) {
      if (a.to < x) continue;
      out << (first ? "\n    " : ",\n    ");
      first = false;
      out << '[' << quoted(g.label(x)) << ", " << quoted(g.label(a.to)) << ", " << format_double(a.weight) << ']';
    }
  }
  out << (first ? "],\n" : "\n  ],\n");
  out << "  \"origin\": " << quoted(g.label(g.origin())) << ",\n  \"targets\": [";
  for (std::size_t i = 0; i < g.targets().size(); ++i) {
    if (i) out << ", ";
    out << quoted(g.label(g.targets()[i]));
  }
  out << "],\n  \"metadata\": " << g.metadata().dump() << "\n}\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

WeightedGraph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("short write to '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hitting
