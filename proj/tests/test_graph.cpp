#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "spingraph/graph.hpp"

using namespace spingraph;

namespace {

Vertex V(const char* label, int genus) { return parse_vertex(label, genus); }

// oracle: count quadrangles {a,b,c,d} that close into a 4-cycle, by plain
// adjacency search over all vertex quadruples
std::size_t brute_force_quadrangles(const SpinGraph& g) {
  auto vs = g.vertices();
  std::size_t count = 0;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      for (std::size_t c = b + 1; c < vs.size(); ++c)
        for (std::size_t d = c + 1; d < vs.size(); ++d) {
          const Vertex &A = vs[a], &B = vs[b], &C = vs[c], &D = vs[d];
          auto cyc = [&](const Vertex& p, const Vertex& q, const Vertex& r, const Vertex& s) {
            return g.adjacent(p, q) && g.adjacent(q, r) && g.adjacent(r, s) && g.adjacent(s, p);
          };
          if (cyc(A, B, C, D) || cyc(A, C, B, D) || cyc(A, B, D, C)) ++count;
        }
  return count;
}

}  // namespace

TEST_CASE("graph construction and counts") {
  SpinGraph g3 = build_graph(3, GraphKind::Standard);
  CHECK(g3.vertex_count() == 8);
  CHECK(g3.edge_count() == 12);
  CHECK(g3.edges().size() == 12);

  SpinGraph w3 = build_graph(3, GraphKind::Weierstrass);
  CHECK(w3.vertex_count() == 4);
  CHECK(w3.edge_count() == 6);
  for (const auto& u : w3.vertices())
    for (const auto& v : w3.vertices())
      CHECK(w3.adjacent(u, v) == (u != v));

  CHECK_THROWS_AS(build_graph(2, GraphKind::Standard), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(1, GraphKind::Weierstrass), std::invalid_argument);
  CHECK_NOTHROW(build_graph(2, GraphKind::Weierstrass));
}

TEST_CASE("vertex labels round-trip") {
  CHECK(to_label(Vertex{0, false}) == "P");
  CHECK(to_label(Vertex{0, true}) == "~P");
  CHECK(to_label(Vertex{3, true}) == "~P3");
  CHECK(parse_vertex("~P12", 15) == Vertex{12, true});
  CHECK_THROWS_AS(parse_vertex("Q1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_vertex("P4", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_vertex("P0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_vertex("", 3), std::invalid_argument);
}

TEST_CASE("ordered neighbor lists match the induced enumerations") {
  SpinGraph g3 = build_graph(3, GraphKind::Standard);
  auto labels = [&](const Vertex& v) {
    std::vector<std::string> out;
    for (const auto& n : g3.neighbors_ordered(v)) out.push_back(to_label(n));
    return out;
  };
  CHECK(labels(V("P2", 3)) == std::vector<std::string>{"P", "~P1", "~P3"});
  CHECK(labels(V("P", 3)) == std::vector<std::string>{"P1", "P2", "P3"});
  CHECK(labels(V("~P", 3)) == std::vector<std::string>{"~P1", "~P2", "~P3"});

  SpinGraph g4 = build_graph(4, GraphKind::Standard);
  std::vector<std::string> got;
  for (const auto& n : g4.neighbors_ordered(V("~P4", 4))) got.push_back(to_label(n));
  CHECK(got == std::vector<std::string>{"~P", "P1", "P2", "P3"});

  SpinGraph w3 = build_graph(3, GraphKind::Weierstrass);
  std::vector<std::string> wg;
  for (const auto& n : w3.neighbors_ordered(V("P2", 3))) wg.push_back(to_label(n));
  CHECK(wg == std::vector<std::string>{"P1", "P", "P3"});

  CHECK_THROWS_AS(g3.neighbors_ordered(Vertex{5, false}), std::invalid_argument);
}

TEST_CASE("neighbor lists avoid the vertex and its conjugate") {
  for (int genus : {3, 4, 6}) {
    SpinGraph g = build_graph(genus, GraphKind::Standard);
    for (const auto& v : g.vertices()) {
      auto nbrs = g.neighbors_ordered(v);
      CHECK(static_cast<int>(nbrs.size()) == genus);
      for (int i = 1; i <= genus; ++i) {
        CHECK(g.adjacent(v, nbrs[i - 1]));
        CHECK(nbrs[i - 1] != v);
        CHECK(nbrs[i - 1] != conjugate(v));
        CHECK(g.neighbor_position(v, nbrs[i - 1]) == i);
        CHECK(g.neighbor_at(v, i) == nbrs[i - 1]);
      }
    }
  }
}

TEST_CASE("face census matches the closed forms and the brute-force oracle") {
  // (g+1)g(g-1)(g-2)/4 faces in total, g(g-1)(g-2)/2 through each vertex
  for (int genus : {3, 4, 5}) {
    SpinGraph g = build_graph(genus, GraphKind::Standard);
    auto faces = enumerate_faces(g);
    std::size_t expect =
        static_cast<std::size_t>(genus + 1) * genus * (genus - 1) * (genus - 2) / 4;
    CHECK(faces.size() == expect);
    CHECK(faces.size() == brute_force_quadrangles(g));
    std::size_t per_vertex = static_cast<std::size_t>(genus) * (genus - 1) * (genus - 2) / 2;
    CHECK(faces_at(g, Vertex{0, false}).size() == per_vertex);
  }
  CHECK(enumerate_faces(build_graph(3, GraphKind::Standard)).size() == 6);
  CHECK(enumerate_faces(build_graph(4, GraphKind::Standard)).size() == 30);
  CHECK(faces_at(build_graph(4, GraphKind::Standard), Vertex{0, false}).size() == 12);
  CHECK(faces_at(build_graph(3, GraphKind::Standard), Vertex{2, true}).size() == 3);

  SpinGraph w3 = build_graph(3, GraphKind::Weierstrass);
  CHECK(enumerate_faces(w3).size() == 4);
  CHECK(faces_at(w3, Vertex{0, false}).size() == 3);
  SpinGraph w5 = build_graph(5, GraphKind::Weierstrass);
  CHECK(faces_at(w5, Vertex{0, false}).size() == 5 * 4 / 2);
}

TEST_CASE("face validation and canonical traversal") {
  SpinGraph g = build_graph(3, GraphKind::Standard);
  Face f = Face::of(g, {V("P2", 3), V("~P3", 3), V("P", 3), V("P1", 3)});
  std::vector<std::string> order;
  for (const auto& v : f.cycle()) order.push_back(to_label(v));
  CHECK(order == std::vector<std::string>{"P", "P1", "~P3", "P2"});
  CHECK(f.has_edge(V("P", 3), V("P1", 3)));
  CHECK(f.has_edge(V("P2", 3), V("P", 3)));
  CHECK_FALSE(f.has_edge(V("P", 3), V("~P3", 3)));  // opposite corners

  // conjugate pair can never share a face
  CHECK_THROWS_AS(Face::of(g, {V("P", 3), V("~P", 3), V("P1", 3), V("~P2", 3)}),
                  std::invalid_argument);
  // same side three times cannot close a quadrangle
  CHECK_THROWS_AS(Face::of(g, {V("P1", 3), V("P2", 3), V("P3", 3), V("~P", 3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Face::of(g, {V("P", 3), V("P1", 3), V("~P3", 3)}), std::invalid_argument);
}

TEST_CASE("face enumeration is deterministic and duplicate-free") {
  SpinGraph g = build_graph(5, GraphKind::Standard);
  auto a = enumerate_faces(g);
  auto b = enumerate_faces(g);
  CHECK(a == b);
  std::set<Face> unique(a.begin(), a.end());
  CHECK(unique.size() == a.size());
}

TEST_CASE("cells of faces and cell extraction") {
  SpinGraph g4 = build_graph(4, GraphKind::Standard);
  Face f = Face::of(g4, {V("P1", 4), V("P2", 4), V("~P3", 4), V("~P4", 4)});
  CHECK(cell_of_face(g4, f).retained == std::vector<int>{1, 2, 3, 4});

  SpinGraph g3 = build_graph(3, GraphKind::Standard);
  Face f3 = Face::of(g3, {V("P", 3), V("P1", 3), V("~P3", 3), V("P2", 3)});
  CHECK(cell_of_face(g3, f3).retained == std::vector<int>{0, 1, 2, 3});

  SpinGraph g5 = build_graph(5, GraphKind::Standard);
  Face f5 = Face::of(g5, {V("P", 5), V("P1", 5), V("~P2", 5), V("P3", 5)});
  CHECK(cell_of_face(g5, f5).retained == std::vector<int>{0, 1, 2, 3});

  CellExtraction ex = extract_cell(g5, {0, 1, 2, 3});
  CHECK(ex.cell.genus() == 3);
  CHECK(ex.vertex_map.size() == 8);
  // adjacency is preserved through the relabeling
  for (const auto& [u, nu] : ex.vertex_map)
    for (const auto& [w, nw] : ex.vertex_map)
      CHECK(g5.adjacent(u, w) == ex.cell.adjacent(nu, nw));

  // hubless retained set: the smallest class takes the hub role
  CellExtraction ex2 = extract_cell(g5, {2, 3, 4, 5});
  CHECK(ex2.cell.genus() == 3);
  CHECK(ex2.vertex_map.at(V("P2", 5)) == V("P", 3));
  for (const auto& [u, nu] : ex2.vertex_map)
    for (const auto& [w, nw] : ex2.vertex_map)
      CHECK(g5.adjacent(u, w) == ex2.cell.adjacent(nu, nw));

  // identity extraction
  CellExtraction all = extract_cell(g3, {0, 1, 2, 3});
  CHECK(all.cell.genus() == 3);
  for (const auto& [u, nu] : all.vertex_map) CHECK(u == nu);

  CHECK_THROWS_AS(extract_cell(g5, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(extract_cell(g5, {0, 1, 2, 9}), std::invalid_argument);
  CHECK_THROWS_AS(extract_cell(build_graph(3, GraphKind::Weierstrass), {0, 1, 2, 3}),
                  std::invalid_argument);
}

TEST_CASE("theta labels form the edge dictionary") {
  SpinGraph g = build_graph(3, GraphKind::Standard);
  auto labels = theta_labels(g);
  CHECK(labels.size() == 12);  // 2 * (1+2+3)

  auto at = [&](const char* a, const char* b) {
    Vertex u = V(a, 3), v = V(b, 3);
    auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    return labels.at(key);
  };
  CHECK(at("P1", "~P3").basepoint == V("P1", 3));
  CHECK(at("P1", "~P3").target == V("~P3", 3));
  CHECK(at("P3", "~P1").basepoint == V("~P1", 3));
  CHECK(at("P3", "~P1").target == V("P3", 3));
  CHECK(at("P", "P2").basepoint == V("P", 3));
  CHECK(at("~P", "~P2").basepoint == V("~P", 3));

  // injectivity over all edges
  std::set<std::pair<Vertex, Vertex>> images;
  for (const auto& [edge, label] : labels) {
    CHECK(g.adjacent(label.basepoint, label.target));
    CHECK(images.insert({label.basepoint, label.target}).second);
  }
  CHECK(images.size() == g.edges().size());

  CHECK_THROWS_AS(theta_labels(build_graph(3, GraphKind::Weierstrass)), std::invalid_argument);
}

TEST_CASE("conjugation is a fixed-point-free involutive automorphism") {
  SpinGraph g = build_graph(4, GraphKind::Standard);
  for (const auto& u : g.vertices()) {
    CHECK(conjugate(u) != u);
    CHECK(conjugate(conjugate(u)) == u);
    CHECK_FALSE(g.adjacent(u, conjugate(u)));
    for (const auto& w : g.vertices())
      CHECK(g.adjacent(u, w) == g.adjacent(conjugate(u), conjugate(w)));
  }
}
