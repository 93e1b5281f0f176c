#include "seplab/io.hpp"

#include <fstream>
#include <sstream>

#include "seplab/errors.hpp"

namespace seplab::io {

namespace {

std::int64_t get_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

std::string pair_str(Vertex u, Vertex v) {
  return "[" + std::to_string(u) + "," + std::to_string(v) + "]";
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw InputError("graph JSON needs fields \"n\" and \"edges\"");
  }
  const std::int64_t n = get_int(doc["n"], "n");
  if (n < 0 || n > (1 << 24)) throw InputError("n out of range");
  if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
  std::vector<Edge> edges;
  std::size_t idx = 0;
  for (const auto& e : doc["edges"]) {
    const std::string where = "edges[" + std::to_string(idx++) + "]";
    if (!e.is_array() || e.size() != 2) throw InputError(where + ": expected [u, v]");
    const std::int64_t u = get_int(e[0], where);
    const std::int64_t v = get_int(e[1], where);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError(where + ": vertex outside 0.." + std::to_string(n - 1));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<int>(n), edges);
}

json representation_to_json(const StringRepresentation& rep) {
  json curves = json::array();
  for (const auto& c : rep.curves) {
    json pts = json::array();
    for (const Point& p : c.points) pts.push_back({p.x, p.y});
    curves.push_back(std::move(pts));
  }
  return json{{"curves", std::move(curves)}};
}

StringRepresentation representation_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("curves") || !doc["curves"].is_array()) {
    throw InputError("representation JSON needs a \"curves\" array");
  }
  StringRepresentation rep;
  std::size_t ci = 0;
  for (const auto& c : doc["curves"]) {
    const std::string where = "curves[" + std::to_string(ci++) + "]";
    if (!c.is_array()) throw InputError(where + ": expected a list of points");
    Polyline poly;
    for (const auto& p : c) {
      if (!p.is_array() || p.size() != 2) throw InputError(where + ": expected [x, y] points");
      poly.points.push_back({get_int(p[0], where), get_int(p[1], where)});
    }
    try {
      check_polyline(poly);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    rep.curves.push_back(std::move(poly));
  }
  return rep;
}

json instance_to_json(const Instance& inst) {
  json doc = graph_to_json(inst.graph);
  if (inst.rep) doc["curves"] = representation_to_json(*inst.rep)["curves"];
  return doc;
}

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("instance JSON must be an object");
  const bool has_graph = doc.contains("n") || doc.contains("edges");
  const bool has_curves = doc.contains("curves");
  if (!has_graph && !has_curves) throw InputError("instance JSON has neither edges nor curves");
  Instance inst;
  if (has_curves) {
    inst.rep = representation_from_json(doc);
    Graph derived = intersection_graph(*inst.rep);
    if (has_graph) {
      const Graph stored = graph_from_json(doc);
      if (stored.n() != derived.n()) {
        throw InputError("representation has " + std::to_string(derived.n()) +
                         " curves but the stored graph has n = " + std::to_string(stored.n()));
      }
      const auto& a = stored.edges();
      const auto& b = derived.edges();
      std::size_t i = 0;
      while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
      if (i < a.size() || i < b.size()) {
        // The first differing pair in lexicographic order.
        if (i < a.size() && (i >= b.size() || a[i] < b[i])) {
          throw InputError("stored edge " + pair_str(a[i].first, a[i].second) +
                           " is not an intersection of the curves");
        }
        throw InputError("curves " + pair_str(b[i].first, b[i].second) +
                         " intersect but the stored graph lacks that edge");
      }
    }
    inst.graph = std::move(derived);
  } else {
    inst.graph = graph_from_json(doc);
  }
  return inst;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("failed writing " + path);
}

Graph load_graph(const std::string& path) { return instance_from_json(read_json_file(path)).graph; }

StringRepresentation load_representation(const std::string& path) {
  Instance inst = instance_from_json(read_json_file(path));
  if (!inst.rep) throw InputError(path + ": no \"curves\" field");
  return std::move(*inst.rep);
}

Instance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

}  // namespace seplab::io
