#include "spingraph/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace spingraph {

namespace {

std::vector<std::string> split_csv(std::string_view csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

ordered_json graph_to_json(const SpinGraph& g) {
  ordered_json j;
  j["genus"] = g.genus();
  j["kind"] = to_string(g.kind());
  auto& verts = j["vertices"] = ordered_json::array();
  for (const auto& v : g.vertices()) verts.push_back(to_label(v));
  auto& edges = j["edges"] = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({to_label(u), to_label(v)});
  auto& faces = j["faces"] = ordered_json::array();
  for (const auto& f : enumerate_faces(g)) {
    ordered_json jf = ordered_json::array();
    for (const auto& v : f.cycle()) jf.push_back(to_label(v));
    faces.push_back(std::move(jf));
  }
  return j;
}

std::string graph_to_dot(const SpinGraph& g) {
  std::ostringstream os;
  os << "graph spin {\n";
  for (const auto& v : g.vertices()) os << "  \"" << to_label(v) << "\";\n";
  for (const auto& [u, v] : g.edges())
    os << "  \"" << to_label(u) << "\" -- \"" << to_label(v) << "\";\n";
  os << "}\n";
  return os.str();
}

ordered_json permutation_to_json(const Permutation& p) {
  ordered_json j;
  j["degree"] = p.degree();
  j["images"] = p.images();
  j["cycles"] = cycle_string(p);
  return j;
}

ordered_json chain_to_json(const SpinChain& w) {
  ordered_json j;
  j["base"] = to_label(w.base);
  auto& loop = j["loop"] = ordered_json::array();
  for (const auto& v : w.loop) loop.push_back(to_label(v));
  auto& faces = j["faces"] = ordered_json::array();
  for (const auto& f : w.faces) {
    ordered_json jf = ordered_json::array();
    for (const auto& v : f.cycle()) jf.push_back(to_label(v));
    faces.push_back(std::move(jf));
  }
  return j;
}

SpinChain chain_from_json(const SpinGraph& g, const nlohmann::json& j) {
  if (!j.contains("base") || !j.contains("loop") || !j.contains("faces"))
    throw std::invalid_argument("chain JSON needs base, loop and faces");
  SpinChain w;
  w.base = parse_vertex(j.at("base").get<std::string>(), g.genus());
  for (const auto& l : j.at("loop"))
    w.loop.push_back(parse_vertex(l.get<std::string>(), g.genus()));
  for (const auto& jf : j.at("faces")) {
    std::vector<Vertex> verts;
    for (const auto& l : jf) verts.push_back(parse_vertex(l.get<std::string>(), g.genus()));
    w.faces.push_back(Face::of(g, std::move(verts)));
  }
  return w;
}

Face face_from_labels(const SpinGraph& g, std::string_view csv) {
  std::vector<Vertex> verts;
  for (const auto& label : split_csv(csv)) verts.push_back(parse_vertex(label, g.genus()));
  return Face::of(g, std::move(verts));
}

std::pair<Vertex, Vertex> edge_from_labels(const SpinGraph& g, std::string_view csv) {
  auto labels = split_csv(csv);
  if (labels.size() != 2)
    throw std::invalid_argument("edge wants exactly two labels, got '" + std::string(csv) + "'");
  Vertex a = parse_vertex(labels[0], g.genus());
  Vertex b = parse_vertex(labels[1], g.genus());
  if (!g.adjacent(a, b))
    throw std::invalid_argument("no edge " + to_label(a) + "-" + to_label(b));
  return {a, b};
}

}  // namespace spingraph
