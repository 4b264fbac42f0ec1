#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "rotate_oracle.hpp"
#include "spingraph/rotation.hpp"

using namespace spingraph;

namespace {
Vertex V(const char* label, int genus) { return parse_vertex(label, genus); }
}  // namespace

TEST_CASE("the four worked rotations around face P,P1,~P3,P2") {
  SpinGraph g = build_graph(3, GraphKind::Standard);
  Face f = Face::of(g, {V("P", 3), V("P1", 3), V("~P3", 3), V("P2", 3)});

  CHECK(rotate(g, f, {V("P", 3), V("P1", 3)}) == Permutation::from_cycles(3, {{1, 3, 2}}));
  CHECK(rotate(g, f, {V("P1", 3), V("~P3", 3)}) == Permutation::from_cycles(3, {{1, 2}}));
  CHECK(rotate(g, f, {V("~P3", 3), V("P2", 3)}) == Permutation::from_cycles(3, {{1, 2, 3}}));
  CHECK(rotate(g, f, {V("P2", 3), V("P", 3)}) == Permutation::from_cycles(3, {{2, 3}}));

  // full perimeter composes to the identity, both directions, any start
  for (const auto& start : f.cycle()) {
    CHECK(perimeter_composition(g, f, start, Direction::Clockwise).is_identity());
    CHECK(perimeter_composition(g, f, start, Direction::CounterClockwise).is_identity());
  }
}

TEST_CASE("the even/odd companion faces from the parity proof") {
  SpinGraph g = build_graph(3, GraphKind::Standard);
  Face f2 = Face::of(g, {V("P", 3), V("P1", 3), V("~P2", 3), V("P3", 3)});
  CHECK(rotate(g, f2, {V("P", 3), V("P1", 3)}) == Permutation::from_cycles(3, {{1, 2, 3}}));
  Face f3 = Face::of(g, {V("P1", 3), V("~P3", 3), V("~P", 3), V("~P2", 3)});
  CHECK(rotate(g, f3, {V("P1", 3), V("~P3", 3)}) == Permutation::from_cycles(3, {{1, 3}}));
}

TEST_CASE("genus-4 cross edge follows the lifted cycle formula") {
  SpinGraph g = build_graph(4, GraphKind::Standard);
  Face f = Face::of(g, {V("P1", 4), V("~P4", 4), V("P2", 4), V("~P3", 4)});
  CHECK(rotate(g, f, {V("P1", 4), V("~P4", 4)}) == Permutation::from_cycles(4, {{2, 4, 3}}));
}

TEST_CASE("forward and backward rotations are mutually inverse") {
  for (auto kind : {GraphKind::Standard, GraphKind::Weierstrass}) {
    SpinGraph g = build_graph(4, kind);
    for (const auto& f : enumerate_faces(g)) {
      const auto& cyc = f.cycle();
      for (int i = 0; i < f.size(); ++i) {
        Vertex a = cyc[i], b = cyc[(i + 1) % f.size()];
        Permutation fwd = rotate(g, f, {a, b});
        Permutation bwd = rotate(g, f, {b, a});
        CHECK(compose(fwd, bwd).is_identity());
        CHECK(compose(bwd, fwd).is_identity());
      }
    }
  }
}

TEST_CASE("face transport is transitive over face vertices") {
  for (int genus : {3, 4, 5}) {
    SpinGraph g = build_graph(genus, GraphKind::Standard);
    auto faces = enumerate_faces(g);
    for (const auto& f : faces) {
      for (const auto& a : f.cycle())
        for (const auto& b : f.cycle())
          for (const auto& c : f.cycle()) {
            Permutation ab = face_permutation(g, f, a, b);
            Permutation bc = face_permutation(g, f, b, c);
            CHECK(compose(bc, ab) == face_permutation(g, f, a, c));
          }
      // both perimeter routes between opposite corners agree
      const auto& cyc = f.cycle();
      Permutation via1 = compose(rotate(g, f, {cyc[1], cyc[2]}), rotate(g, f, {cyc[0], cyc[1]}));
      Permutation via2 = compose(rotate(g, f, {cyc[3], cyc[2]}), rotate(g, f, {cyc[0], cyc[3]}));
      CHECK(via1 == via2);
    }
  }
}

TEST_CASE("orientation weights reproduce the pictured annotations") {
  SpinGraph g = build_graph(3, GraphKind::Standard);
  CHECK(orientation_weight(g, V("P", 3)) == +1);
  CHECK(orientation_weight(g, V("P1", 3)) == +1);
  CHECK(orientation_weight(g, V("P2", 3)) == -1);
  CHECK(orientation_weight(g, V("P3", 3)) == +1);
  CHECK(orientation_weight(g, V("~P", 3)) == -1);
  CHECK(orientation_weight(g, V("~P1", 3)) == -1);
  CHECK(orientation_weight(g, V("~P2", 3)) == +1);
  CHECK(orientation_weight(g, V("~P3", 3)) == -1);
  for (const auto& v : g.vertices())
    CHECK(orientation_weight(g, conjugate(v)) == -orientation_weight(g, v));
  CHECK_THROWS_AS(orientation_weight(build_graph(3, GraphKind::Weierstrass), V("P", 3)),
                  std::invalid_argument);
}

TEST_CASE("rotation parity equals the product of endpoint weights") {
  for (int genus : {3, 4, 5}) {
    SpinGraph g = build_graph(genus, GraphKind::Standard);
    for (const auto& f : enumerate_faces(g)) {
      const auto& cyc = f.cycle();
      for (int i = 0; i < 4; ++i) {
        Vertex a = cyc[i], b = cyc[(i + 1) % 4];
        CHECK(sign(rotate(g, f, {a, b})) ==
              orientation_weight(g, a) * orientation_weight(g, b));
      }
    }
  }
}

TEST_CASE("parity is independent of the chosen face") {
  for (int genus : {3, 4, 5, 6}) {
    SpinGraph g = build_graph(genus, GraphKind::Standard);
    auto faces = enumerate_faces(g);
    for (const auto& [u, v] : g.edges()) {
      int first = 0;
      for (const auto& f : faces) {
        if (!f.has_edge(u, v)) continue;
        int s = sign(rotate(g, f, {u, v}));
        if (first == 0)
          first = s;
        else
          CHECK(s == first);
      }
    }
  }
}

TEST_CASE("spectator classes are preserved") {
  for (auto kind : {GraphKind::Standard, GraphKind::Weierstrass}) {
    SpinGraph g = build_graph(5, kind);
    auto faces = enumerate_faces(g);
    for (std::size_t fi = 0; fi < faces.size(); fi += 3) {
      const Face& f = faces[fi];
      const auto& cyc = f.cycle();
      auto classes = f.classes();
      Vertex from = cyc[0], to = cyc[1];
      Permutation p = rotate(g, f, {from, to});
      for (int cls = 0; cls <= 5; ++cls) {
        if (cls == from.cls) continue;
        if (std::count(classes.begin(), classes.end(), cls)) continue;
        int pos = g.neighbor_position(from, g.neighbor_in_class(from, cls));
        CHECK(g.neighbor_at(to, p.apply(pos)).cls == cls);
      }
    }
  }
}

TEST_CASE("Weierstrass triangles swap through the third vertex") {
  SpinGraph g = build_graph(5, GraphKind::Weierstrass);
  const Vertex hub = V("P", 5), last = V("P5", 5);
  for (int i = 1; i <= 4; ++i) {
    Face f = Face::of(g, {hub, Vertex{i, false}, last});
    CHECK(rotate(g, f, {hub, last}) == Permutation::from_cycles(5, {{i, 5}}));
  }
  // triangle perimeter composes to the identity as well
  Face f = Face::of(g, {hub, V("P2", 5), last});
  for (const auto& start : f.cycle()) {
    CHECK(perimeter_composition(g, f, start, Direction::Clockwise).is_identity());
    CHECK(perimeter_composition(g, f, start, Direction::CounterClockwise).is_identity());
  }
}

TEST_CASE("production rotation agrees with the scan oracle") {
  for (auto kind : {GraphKind::Standard, GraphKind::Weierstrass}) {
    for (int genus : {3, 4}) {
      SpinGraph g = build_graph(genus, kind);
      for (const auto& f : enumerate_faces(g)) {
        const auto& cyc = f.cycle();
        for (int i = 0; i < f.size(); ++i) {
          for (int d : {1, f.size() - 1}) {
            Vertex a = cyc[i], b = cyc[(i + d) % f.size()];
            CHECK(rotate(g, f, {a, b}) == oracle::rotate_by_scan(g, f, a, b));
          }
        }
      }
    }
  }
}

TEST_CASE("rotation rejects edges off the face") {
  SpinGraph g = build_graph(3, GraphKind::Standard);
  Face f = Face::of(g, {V("P", 3), V("P1", 3), V("~P3", 3), V("P2", 3)});
  CHECK_THROWS_AS(rotate(g, f, {V("P", 3), V("P3", 3)}), std::invalid_argument);
  CHECK_THROWS_AS(rotate(g, f, {V("P", 3), V("~P3", 3)}), std::invalid_argument);  // diagonal
  CHECK_THROWS_AS(perimeter_composition(g, f, V("P3", 3), Direction::Clockwise),
                  std::invalid_argument);
}

TEST_CASE("cell-local orderings list the in-cell slots") {
  SpinGraph g = build_graph(5, GraphKind::Standard);
  Face f = Face::of(g, {V("P", 5), V("P2", 5), V("~P3", 5), V("P5", 5)});
  Cell c = cell_of_face(g, f);
  CHECK(c.retained == std::vector<int>{0, 2, 3, 5});
  auto hub = CellLocalOrdering::of(g, V("P", 5), c);
  CHECK(hub.slots == std::array<int, 3>{2, 3, 5});
  auto leaf = CellLocalOrdering::of(g, V("P2", 5), c);
  // P sits first, ~P3 and ~P5 keep their class positions
  CHECK(leaf.slots == std::array<int, 3>{1, 3, 5});
  CHECK_THROWS_AS(CellLocalOrdering::of(g, V("P1", 5), c), std::invalid_argument);
}
