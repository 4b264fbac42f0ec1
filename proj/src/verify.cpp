#include "spingraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spingraph/chain.hpp"
#include "spingraph/perm_group.hpp"
#include "spingraph/transport.hpp"

namespace spingraph {

namespace {

using nlohmann::ordered_json;

ordered_json face_json(const Face& f) {
  ordered_json out = ordered_json::array();
  for (const auto& v : f.cycle()) out.push_back(to_label(v));
  return out;
}

ordered_json chain_json_brief(const SpinChain& w) {
  ordered_json out;
  ordered_json loop = ordered_json::array();
  for (const auto& v : w.loop) loop.push_back(to_label(v));
  out["loop"] = std::move(loop);
  ordered_json faces = ordered_json::array();
  for (const auto& f : w.faces) faces.push_back(face_json(f));
  out["faces"] = std::move(faces);
  return out;
}

void fail(CheckOutcome& out, ordered_json counterexample) {
  if (!out.passed) return;  // keep the first counterexample
  out.passed = false;
  out.counterexample = std::move(counterexample);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// lexicographic combination stepping over {0..n-1}
bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------- graph

CheckOutcome check_graph(const CheckContext& ctx) {
  CheckOutcome out;
  SpinGraph g = build_graph(ctx.genus, ctx.kind);
  const int n = ctx.genus;
  const auto verts = g.vertices();

  int expect_vertices = ctx.kind == GraphKind::Standard ? 2 * n + 2 : n + 1;
  if (g.vertex_count() != expect_vertices ||
      static_cast<int>(verts.size()) != expect_vertices)
    fail(out, {{"what", "vertex count"}, {"expected", expect_vertices}});
  int expect_edges = ctx.kind == GraphKind::Standard ? n * (n + 1) : n * (n + 1) / 2;
  if (g.edge_count() != expect_edges ||
      static_cast<int>(g.edges().size()) != expect_edges)
    fail(out, {{"what", "edge count"}, {"expected", expect_edges}});

  for (const auto& v : verts) {
    auto nbrs = g.neighbors_ordered(v);
    if (static_cast<int>(nbrs.size()) != n)
      fail(out, {{"what", "degree"}, {"vertex", to_label(v)}});
    std::set<Vertex> distinct(nbrs.begin(), nbrs.end());
    if (static_cast<int>(distinct.size()) != n)
      fail(out, {{"what", "repeated neighbor"}, {"vertex", to_label(v)}});
    for (int i = 1; i <= n; ++i) {
      const Vertex& w = nbrs[i - 1];
      if (!g.adjacent(v, w) || w == v ||
          (ctx.kind == GraphKind::Standard && w == conjugate(v)))
        fail(out, {{"what", "bad neighbor"}, {"vertex", to_label(v)}, {"nbr", to_label(w)}});
      if (g.neighbor_position(v, w) != i || !(g.neighbor_at(v, i) == w))
        fail(out, {{"what", "position mismatch"}, {"vertex", to_label(v)}, {"pos", i}});
      if (!(g.neighbor_in_class(v, w.cls) == w))
        fail(out, {{"what", "class lookup mismatch"}, {"vertex", to_label(v)}});
    }
  }

  if (ctx.kind == GraphKind::Standard) {
    for (const auto& u : verts) {
      if (conjugate(u) == u || !(conjugate(conjugate(u)) == u) || g.adjacent(u, conjugate(u)))
        fail(out, {{"what", "conjugation involution"}, {"vertex", to_label(u)}});
      for (const auto& w : verts)
        if (g.adjacent(u, w) != g.adjacent(conjugate(u), conjugate(w)))
          fail(out, {{"what", "conjugation not an automorphism"},
                     {"pair", {to_label(u), to_label(w)}}});
    }
    // 2-colorability: classes of a proper bipartition exist
    std::map<Vertex, int> color;
    std::vector<Vertex> stack{verts.front()};
    color[verts.front()] = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto& w : g.neighbors_ordered(v)) {
        auto it = color.find(w);
        if (it == color.end()) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (it->second == color[v]) {
          fail(out, {{"what", "graph is not bipartite"}, {"vertex", to_label(w)}});
        }
      }
    }
  } else {
    for (const auto& u : verts)
      for (const auto& w : verts)
        if (g.adjacent(u, w) != (u != w))
          fail(out, {{"what", "not a complete graph"}, {"pair", {to_label(u), to_label(w)}}});
  }

  // face list: stable, duplicate-free, cycles valid, traversal unique
  auto faces = enumerate_faces(g);
  auto faces_again = enumerate_faces(g);
  if (!(faces == faces_again)) fail(out, {{"what", "face enumeration unstable"}});
  for (std::size_t i = 0; i + 1 < faces.size(); ++i)
    if (faces[i] == faces[i + 1]) fail(out, {{"what", "duplicate face"}, {"face", face_json(faces[i])}});
  for (const auto& f : faces) {
    const auto& cyc = f.cycle();
    for (std::size_t i = 0; i < cyc.size(); ++i)
      if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]))
        fail(out, {{"what", "face cycle broken"}, {"face", face_json(f)}});
    if (ctx.kind == GraphKind::Standard) {
      // of the three pairings into opposite corners, exactly one closes
      const Vertex a = cyc[0], b = cyc[1], c = cyc[2], d = cyc[3];
      auto closes = [&](Vertex p, Vertex q, Vertex r, Vertex s) {
        return g.adjacent(p, q) && g.adjacent(q, r) && g.adjacent(r, s) && g.adjacent(s, p);
      };
      int ways = closes(a, b, c, d) + closes(a, c, b, d) + closes(a, b, d, c);
      if (ways != 1)
        fail(out, {{"what", "face traversal not unique"}, {"face", face_json(f)}, {"ways", ways}});
    }
  }
  return out;
}

// ----------------------------------------------------------- permutations

CheckOutcome check_permutation_laws(const CheckContext& ctx) {
  CheckOutcome out;
  const int n = ctx.genus;
  std::mt19937_64 rng(ctx.seed);
  auto random_perm = [&]() {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(images[i], images[rng() % (i + 1)]);
    return Permutation(std::move(images));
  };
  auto sign_by_inversions = [&](const Permutation& p) {
    int inv = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (p.apply(i) > p.apply(j)) ++inv;
    return inv % 2 == 0 ? +1 : -1;
  };
  for (int trial = 0; trial < 200; ++trial) {
    Permutation a = random_perm(), b = random_perm(), c = random_perm();
    if (!(compose(compose(a, b), c) == compose(a, compose(b, c))))
      fail(out, {{"what", "associativity"}, {"a", cycle_string(a)}});
    if (!compose(a, a.inverse()).is_identity() || !compose(a.inverse(), a).is_identity())
      fail(out, {{"what", "inverse"}, {"a", cycle_string(a)}});
    if (sign(compose(a, b)) != sign(a) * sign(b))
      fail(out, {{"what", "sign homomorphism"}, {"a", cycle_string(a)}, {"b", cycle_string(b)}});
    if (sign(a) != sign_by_inversions(a))
      fail(out, {{"what", "sign vs inversion count"}, {"a", cycle_string(a)}});
    if (!(Permutation::from_cycles(n, cycles(a)) == a))
      fail(out, {{"what", "cycle round-trip"}, {"a", cycle_string(a)}});
  }
  // closure and stabilizer chain agree where both are feasible
  if (n <= 7) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Permutation> gens = {random_perm(), random_perm()};
      if (closure_order(gens) != stabilizer_chain_order(gens))
        fail(out, {{"what", "closure vs stabilizer chain"},
                   {"gens", {cycle_string(gens[0]), cycle_string(gens[1])}}});
    }
    out.notes["order_routes_compared"] = true;
  }
  return out;
}

// -------------------------------------------------- rotation algebra laws

CheckOutcome check_rotation_algebra(const CheckContext& ctx) {
  CheckOutcome out;
  SpinGraph g = build_graph(ctx.genus, ctx.kind);
  auto faces = enumerate_faces(g);
  std::size_t cap = ctx.genus <= 6 ? faces.size() : 120;
  for (std::size_t i = 0; i < faces.size() && i < cap; ++i) {
    const Face& f = faces[i];
    const auto& cyc = f.cycle();
    for (int t = 0; t < f.size(); ++t) {
      Vertex a = cyc[t], b = cyc[(t + 1) % f.size()];
      Permutation fwd = rotate(g, f, {a, b});
      Permutation bwd = rotate(g, f, {b, a});
      if (!compose(fwd, bwd).is_identity() || !compose(bwd, fwd).is_identity())
        fail(out, {{"what", "edge rotations not mutually inverse"},
                   {"face", face_json(f)},
                   {"edge", {to_label(a), to_label(b)}}});
    }
    for (const auto& a : cyc)
      for (const auto& b : cyc)
        for (const auto& c : cyc) {
          Permutation ab = face_permutation(g, f, a, b);
          Permutation bc = face_permutation(g, f, b, c);
          if (!(compose(bc, ab) == face_permutation(g, f, a, c)))
            fail(out, {{"what", "face transport not transitive"},
                       {"face", face_json(f)},
                       {"triple", {to_label(a), to_label(b), to_label(c)}}});
        }
    for (Direction d : {Direction::Clockwise, Direction::CounterClockwise})
      if (!perimeter_composition(g, f, cyc[0], d).is_identity())
        fail(out, {{"what", "perimeter composite not identity"}, {"face", face_json(f)}});
  }
  out.notes["faces_checked"] = std::min(cap, faces.size());
  return out;
}

// ---------------------------------------------------------------- lemma 1

CheckOutcome check_lemma1(const CheckContext& ctx) {
  CheckOutcome out;
  SpinGraph g = build_graph(ctx.genus, ctx.kind);
  auto labels = theta_labels(g);
  auto edges = g.edges();
  if (labels.size() != edges.size() ||
      static_cast<int>(labels.size()) != ctx.genus * (ctx.genus + 1))
    fail(out, {{"what", "label count"}, {"got", labels.size()}});
  std::set<std::pair<Vertex, Vertex>> images;
  for (const auto& [edge, label] : labels) {
    if (!g.adjacent(label.basepoint, label.target))
      fail(out, {{"what", "label endpoints not adjacent"},
                 {"edge", {to_label(edge.first), to_label(edge.second)}}});
    if (!images.insert({label.basepoint, label.target}).second)
      fail(out, {{"what", "label repeated"},
                 {"label", {to_label(label.basepoint), to_label(label.target)}}});
    // branch rules
    const Vertex &u = edge.first, &v = edge.second;
    Vertex expect_base, expect_target;
    if (u.cls == 0 || v.cls == 0) {
      expect_base = u.cls == 0 ? u : v;
      expect_target = u.cls == 0 ? v : u;
    } else {
      const Vertex& plain = u.conjugated ? v : u;
      const Vertex& tilde = u.conjugated ? u : v;
      if (plain.cls < tilde.cls) {
        expect_base = plain;
        expect_target = tilde;
      } else {
        expect_base = tilde;
        expect_target = plain;
      }
    }
    if (!(label.basepoint == expect_base) || !(label.target == expect_target))
      fail(out, {{"what", "branch rule"},
                 {"edge", {to_label(u), to_label(v)}},
                 {"got", {to_label(label.basepoint), to_label(label.target)}}});
  }
  for (const auto& e : edges)
    if (!labels.count(e))
      fail(out, {{"what", "edge without label"}, {"edge", {to_label(e.first), to_label(e.second)}}});
  return out;
}

// ---------------------------------------------------------------- lemma 2

CheckOutcome check_lemma2(const CheckContext& ctx) {
  CheckOutcome out;
  const int n = ctx.genus;
  SpinGraph g = build_graph(n, ctx.kind);
  auto faces = enumerate_faces(g);
  std::uint64_t expect_total = static_cast<std::uint64_t>(n + 1) * n * (n - 1) * (n - 2) / 4;
  if (faces.size() != expect_total)
    fail(out, {{"what", "total faces"}, {"expected", expect_total}, {"got", faces.size()}});
  std::uint64_t expect_at = static_cast<std::uint64_t>(n) * (n - 1) * (n - 2) / 2;
  for (const auto& v : g.vertices()) {
    std::uint64_t have = 0;
    for (const auto& f : faces)
      if (f.contains(v)) ++have;
    if (have != expect_at)
      fail(out, {{"what", "faces through vertex"},
                 {"vertex", to_label(v)},
                 {"expected", expect_at},
                 {"got", have}});
  }
  return out;
}

// ---------------------------------------------------------------- remarks

CheckOutcome check_remark1(const CheckContext& ctx) {
  CheckOutcome out;
  const int g = ctx.genus;
  SpinGraph graph = build_graph(g, ctx.kind);
  int total_checked = 0;
  for (int n = 3; n <= g; ++n) {
    const int size = n + 1;
    std::uint64_t total = binomial(g + 1, size);
    std::uint64_t stride = total <= 60 ? 1 : (total + 59) / 60;
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    std::uint64_t index = 0;
    do {
      if (index % stride == 0) {
        try {
          CellExtraction ex = extract_cell(graph, combo);
          if (ex.cell.genus() != n) fail(out, {{"what", "cell genus"}, {"n", n}});
          std::set<Vertex> image;
          for (const auto& [from, to] : ex.vertex_map) {
            if (!ex.cell.has_vertex(to)) fail(out, {{"what", "image outside cell"}, {"n", n}});
            image.insert(to);
          }
          if (static_cast<int>(image.size()) != 2 * (n + 1))
            fail(out, {{"what", "relabeling not bijective"}, {"n", n}});
        } catch (const std::exception& e) {
          fail(out, {{"what", "extraction failed"}, {"n", n}, {"error", e.what()}});
        }
        ++total_checked;
      }
      ++index;
    } while (next_combination(combo, g + 1));
  }
  out.notes["cells_checked"] = total_checked;
  return out;
}

CheckOutcome check_remark2(const CheckContext& ctx) {
  CheckOutcome out;
  const int g = ctx.genus;
  SpinGraph graph = build_graph(g, ctx.kind);
  // every face determines a 3-cell, and together they hit every 4-subset
  if (g <= 8) {
    std::set<std::vector<int>> cells;
    for (const auto& f : enumerate_faces(graph)) cells.insert(cell_of_face(graph, f).retained);
    if (cells.size() != binomial(g + 1, 4))
      fail(out, {{"what", "3-cell census"},
                 {"expected", binomial(g + 1, 4)},
                 {"got", cells.size()}});
  }
  // subset counts match the binomial census, including g+1 cells of rank g-1
  for (int n : {3, g - 1}) {
    if (n < 3 || n > g - 1) continue;
    std::vector<int> combo(n + 1);
    for (int i = 0; i <= n; ++i) combo[i] = i;
    std::uint64_t count = 1;
    while (next_combination(combo, g + 1)) ++count;
    if (count != binomial(g + 1, g - n))
      fail(out, {{"what", "cell count"}, {"n", n}, {"got", count}});
    if (n == g - 1 && count != static_cast<std::uint64_t>(g) + 1)
      fail(out, {{"what", "(g-1)-cell count"}, {"got", count}});
  }
  return out;
}

// ------------------------------------------------------------- section 3

CheckOutcome check_section3(const CheckContext& ctx) {
  CheckOutcome out;
  SpinGraph g = build_graph(3, ctx.kind);
  auto V = [&](const char* s) { return parse_vertex(s, 3); };

  // induced neighbor enumerations
  struct NbrCase {
    const char* v;
    std::vector<const char*> expect;
  };
  for (const NbrCase& c : {NbrCase{"P", {"P1", "P2", "P3"}},
                           NbrCase{"P2", {"P", "~P1", "~P3"}},
                           NbrCase{"P1", {"P", "~P2", "~P3"}},
                           NbrCase{"~P3", {"~P", "P1", "P2"}}}) {
    auto nbrs = g.neighbors_ordered(V(c.v));
    for (int i = 0; i < 3; ++i)
      if (!(nbrs[i] == V(c.expect[i])))
        fail(out, {{"what", "neighbor order"}, {"vertex", c.v}});
  }

  Face f1 = Face::of(g, {V("P"), V("P1"), V("~P3"), V("P2")});
  struct EdgeCase {
    const char* from;
    const char* to;
    std::vector<std::vector<int>> expect;
  };
  for (const EdgeCase& c : {EdgeCase{"P", "P1", {{1, 3, 2}}},
                            EdgeCase{"P1", "~P3", {{1, 2}}},
                            EdgeCase{"~P3", "P2", {{1, 2, 3}}},
                            EdgeCase{"P2", "P", {{2, 3}}}}) {
    Permutation got = rotate(g, f1, OrientedEdge{V(c.from), V(c.to)});
    Permutation expect = Permutation::from_cycles(3, c.expect);
    if (!(got == expect))
      fail(out, {{"what", "worked rotation"},
                 {"edge", {c.from, c.to}},
                 {"expected", cycle_string(expect)},
                 {"got", cycle_string(got)}});
  }

  // the second face through PP1 and the odd pair on edge P1~P3
  Face f2 = Face::of(g, {V("P"), V("P1"), V("~P2"), V("P3")});
  if (!(rotate(g, f2, {V("P"), V("P1")}) == Permutation::from_cycles(3, {{1, 2, 3}})))
    fail(out, {{"what", "second face rotation"}, {"face", face_json(f2)}});
  Face f3 = Face::of(g, {V("P1"), V("~P3"), V("~P"), V("~P2")});
  if (!(rotate(g, f3, {V("P1"), V("~P3")}) == Permutation::from_cycles(3, {{1, 3}})))
    fail(out, {{"what", "odd pair rotation"}, {"face", face_json(f3)}});

  // perimeter composite is the identity from every start, both ways
  for (const auto& start : f1.cycle())
    for (Direction d : {Direction::Clockwise, Direction::CounterClockwise})
      if (!perimeter_composition(g, f1, start, d).is_identity())
        fail(out, {{"what", "perimeter composite"}, {"start", to_label(start)}});
  return out;
}

// ------------------------------------------------------------- section 4

std::vector<int> run_of(int lo, int hi) {  // [lo..hi]
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

CheckOutcome check_section4(const CheckContext& ctx) {
  CheckOutcome out;
  const int g = ctx.genus;
  SpinGraph graph = build_graph(g, ctx.kind);
  auto P = [&](int m) { return Vertex{m, false}; };
  auto T = [&](int m) { return Vertex{m, true}; };

  int triples = 0;
  const int triple_cap = g <= 10 ? 1 << 30 : 120;
  for (int n1 = 1; n1 <= g && triples < triple_cap; ++n1)
    for (int n2 = n1 + 1; n2 <= g && triples < triple_cap; ++n2)
      for (int n3 = n2 + 1; n3 <= g && triples < triple_cap; ++n3, ++triples) {
        // hub-edge rotation: one cycle sweeping 1..n1 then n3, n2
        Face f = Face::of(graph, {P(0), P(n1), T(n3), P(n2)});
        std::vector<int> cyc = run_of(1, n1);
        cyc.push_back(n3);
        cyc.push_back(n2);
        Permutation expect = Permutation::from_cycles(g, {cyc});
        Permutation got = rotate(graph, f, {P(0), P(n1)});
        if (!(got == expect))
          fail(out, {{"what", "hub-edge cycle formula"},
                     {"n", {n1, n2, n3}},
                     {"expected", cycle_string(expect)},
                     {"got", cycle_string(got)}});
        // middle-index variant: two cycles
        Face f2 = Face::of(graph, {P(0), P(n2), T(n1), P(n3)});
        std::vector<int> c1 = run_of(1, n1);
        c1.push_back(n3);
        std::vector<int> c2 = run_of(n1 + 1, n2);
        Permutation expect2 = Permutation::from_cycles(g, {c1, c2});
        Permutation got2 = rotate(graph, f2, {P(0), P(n2)});
        if (!(got2 == expect2))
          fail(out, {{"what", "middle-index formula"},
                     {"n", {n1, n2, n3}},
                     {"expected", cycle_string(expect2)},
                     {"got", cycle_string(got2)}});
      }

  int quads = 0;
  const int quad_cap = g <= 10 ? 1 << 30 : 150;
  for (int n1 = 1; n1 <= g && quads < quad_cap; ++n1)
    for (int n2 = n1 + 1; n2 <= g && quads < quad_cap; ++n2)
      for (int n3 = n2 + 1; n3 <= g && quads < quad_cap; ++n3)
        for (int n4 = n3 + 1; n4 <= g && quads < quad_cap; ++n4, ++quads) {
          Face f = Face::of(graph, {P(n1), T(n4), P(n2), T(n3)});
          std::vector<int> cyc = run_of(n1 + 1, n2);
          for (int i : run_of(n3 + 1, n4)) cyc.push_back(i);
          for (int i : run_of(n2 + 1, n3)) cyc.push_back(i);
          Permutation expect = Permutation::from_cycles(g, {cyc});
          Permutation got = rotate(graph, f, {P(n1), T(n4)});
          if (!(got == expect))
            fail(out, {{"what", "cross-edge cycle formula"},
                       {"n", {n1, n2, n3, n4}},
                       {"expected", cycle_string(expect)},
                       {"got", cycle_string(got)}});
          std::vector<int> c1 = run_of(n1 + 1, n2);
          c1.push_back(n4);
          std::vector<int> c2 = run_of(n2 + 1, n3);
          Permutation expect2 = Permutation::from_cycles(g, {c1, c2});
          Permutation got2 = rotate(graph, f, {P(n1), T(n3)});
          if (!(got2 == expect2))
            fail(out, {{"what", "cross-edge two-cycle formula"},
                       {"n", {n1, n2, n3, n4}},
                       {"expected", cycle_string(expect2)},
                       {"got", cycle_string(got2)}});
        }
  out.notes["triples"] = triples;
  out.notes["quadruples"] = quads;
  return out;
}

// ------------------------------------------------------ orientation weights

CheckOutcome check_pict1(const CheckContext& ctx) {
  CheckOutcome out;
  SpinGraph g = build_graph(ctx.genus, ctx.kind);
  if (ctx.genus == 3) {
    struct W {
      const char* v;
      int w;
    };
    for (const W& c : {W{"P", +1}, W{"P1", +1}, W{"P2", -1}, W{"P3", +1}, W{"~P", -1},
                       W{"~P1", -1}, W{"~P2", +1}, W{"~P3", -1}}) {
      if (orientation_weight(g, parse_vertex(c.v, 3)) != c.w)
        fail(out, {{"what", "pictured weight"}, {"vertex", c.v}, {"expected", c.w}});
    }
  }
  if (orientation_weight(g, Vertex{0, false}) != +1)
    fail(out, {{"what", "hub weight"}});
  for (int m = 1; m <= ctx.genus; ++m) {
    int expect = (m % 2 == 1) ? +1 : -1;
    if (orientation_weight(g, Vertex{m, false}) != expect)
      fail(out, {{"what", "leaf weight"}, {"class", m}});
  }
  for (const auto& v : g.vertices())
    if (orientation_weight(g, conjugate(v)) != -orientation_weight(g, v))
      fail(out, {{"what", "conjugate weight"}, {"vertex", to_label(v)}});
  return out;
}

// -------------------------------------------------- parity suite (3, 4, 5)

CheckOutcome parity_suite_impl(const SpinGraph& g, const detail::RotationFn& rot,
                               int face_cap) {
  CheckOutcome out;
  auto faces = enumerate_faces(g);
  const auto verts = g.vertices();
  for (const auto& u : verts) {
    for (const auto& v : verts) {
      if (!(u < v) || !g.adjacent(u, v)) continue;
      std::vector<const Face*> through;
      for (const auto& f : faces) {
        if (f.has_edge(u, v)) through.push_back(&f);
        if (face_cap > 0 && static_cast<int>(through.size()) >= face_cap) break;
      }
      int expect = orientation_weight(g, u) * orientation_weight(g, v);
      // printed closed forms for the two edge shapes
      if (u.cls == 0 || v.cls == 0) {
        int k = u.cls == 0 ? v.cls : u.cls;
        int printed = (k - 1) % 2 == 0 ? +1 : -1;
        if (printed != expect)
          fail(out, {{"what", "hub-edge sign form"}, {"edge", {to_label(u), to_label(v)}}});
      } else {
        int d = std::abs(u.cls - v.cls);
        int printed = (d - 1) % 2 == 0 ? +1 : -1;
        if (printed != expect)
          fail(out, {{"what", "cross-edge sign form"}, {"edge", {to_label(u), to_label(v)}}});
      }
      for (const Face* f : through) {
        int s = sign(rot(g, *f, OrientedEdge{u, v}));
        if (s != expect)
          fail(out, {{"what", "sign law"},
                     {"edge", {to_label(u), to_label(v)}},
                     {"face", face_json(*f)},
                     {"expected", expect},
                     {"got", s}});
        int s_back = sign(rot(g, *f, OrientedEdge{v, u}));
        if (s_back != s)
          fail(out, {{"what", "orientation changed parity"},
                     {"edge", {to_label(u), to_label(v)}},
                     {"face", face_json(*f)}});
      }
    }
  }
  return out;
}

CheckOutcome check_lemma3(const CheckContext& ctx) {
  CheckOutcome out;
  SpinGraph g = build_graph(3, ctx.kind);
  auto faces = enumerate_faces(g);
  for (const auto& [u, v] : g.edges()) {
    std::vector<int> signs;
    for (const auto& f : faces)
      if (f.has_edge(u, v)) signs.push_back(sign(rotate(g, f, OrientedEdge{u, v})));
    if (signs.size() != 2)
      fail(out, {{"what", "faces per edge at genus 3"}, {"got", signs.size()}});
    for (int s : signs)
      if (s != signs.front())
        fail(out, {{"what", "parity depends on face"}, {"edge", {to_label(u), to_label(v)}}});
  }
  return out;
}

// The opposite-edge parity statement is a genus-3 fact: there every face
// carries all four classes, whose weights multiply to +1. For higher genus
// the product of the four endpoint weights is (-1)^(class sum), so opposite
// edges agree exactly on faces with even class sum; that refinement is what
// gets asserted, and at genus 3 it reduces to plain equality.
CheckOutcome check_lemma4(const CheckContext& ctx) {
  CheckOutcome out;
  SpinGraph g = build_graph(ctx.genus, ctx.kind);
  auto faces = enumerate_faces(g);
  std::size_t cap = ctx.genus <= 6 ? faces.size() : 500;
  for (std::size_t i = 0; i < faces.size() && i < cap; ++i) {
    const auto& cyc = faces[i].cycle();
    int class_sum = 0;
    for (const auto& v : cyc) class_sum += v.cls;
    int product = class_sum % 2 == 0 ? +1 : -1;
    int s01 = sign(rotate(g, faces[i], {cyc[0], cyc[1]}));
    int s23 = sign(rotate(g, faces[i], {cyc[2], cyc[3]}));
    int s12 = sign(rotate(g, faces[i], {cyc[1], cyc[2]}));
    int s30 = sign(rotate(g, faces[i], {cyc[3], cyc[0]}));
    if (s01 * s23 != product || s12 * s30 != product)
      fail(out, {{"what", "opposite-edge sign product"},
                 {"face", face_json(faces[i])},
                 {"expected_product", product}});
    if (ctx.genus == 3 && (s01 != s23 || s12 != s30))
      fail(out, {{"what", "opposite edges differ at genus 3"},
                 {"face", face_json(faces[i])}});
  }
  return out;
}

CheckOutcome check_lemma5(const CheckContext& ctx) {
  SpinGraph g = build_graph(ctx.genus, ctx.kind);
  int cap = ctx.genus <= 6 ? 0 : 30;
  auto rot = [](const SpinGraph& gg, const Face& f, const OrientedEdge& e) {
    return rotate(gg, f, e);
  };
  CheckOutcome out = parity_suite_impl(g, rot, cap);
  out.notes["faces_per_edge"] = cap == 0 ? "all" : std::to_string(cap);
  return out;
}

// ------------------------------------------------------------- section 6

CheckOutcome check_section6(const CheckContext& ctx) {
  CheckOutcome out;
  SpinGraph g = build_graph(ctx.genus, ctx.kind);
  auto faces = enumerate_faces(g);
  const auto verts = g.vertices();
  for (const auto& u : verts)
    for (const auto& v : verts) {
      if (!(u < v)) continue;
      std::vector<const Face*> through;
      for (const auto& f : faces)
        if (f.has_edge(u, v)) through.push_back(&f);
      if (static_cast<int>(through.size()) != ctx.genus - 1)
        fail(out, {{"what", "triangles per edge"}, {"got", through.size()}});
      std::vector<int> signs;
      for (const Face* f : through) signs.push_back(sign(rotate(g, *f, OrientedEdge{u, v})));
      for (int s : signs)
        if (s != signs.front())
          fail(out, {{"what", "parity depends on face"}, {"edge", {to_label(u), to_label(v)}}});
      // two-face composites are even
      std::size_t pair_cap = 10;
      for (std::size_t i = 0; i < through.size() && i < pair_cap; ++i)
        for (std::size_t j = 0; j < through.size() && j < pair_cap; ++j) {
          if (i == j) continue;
          Permutation comp = compose(rotate(g, *through[j], OrientedEdge{v, u}),
                                     rotate(g, *through[i], OrientedEdge{u, v}));
          if (sign(comp) != +1)
            fail(out, {{"what", "odd two-face composite"},
                       {"edge", {to_label(u), to_label(v)}}});
        }
    }
  return out;
}

// --------------------------------------------------------------- lemma 6

// exhaustive closed walks of bounded length with every face choice
CheckOutcome chains_even_exhaustive(const SpinGraph& g, int max_len) {
  CheckOutcome out;
  const int n = g.genus();
  auto faces = enumerate_faces(g);
  const auto verts = g.vertices();
  auto vid = [&](const Vertex& v) {
    return v.cls * 2 + (v.conjugated ? 1 : 0);
  };
  const int idspace = (n + 1) * 2;

  // image rows for every (oriented edge, face)
  std::vector<std::vector<std::vector<int>>> rows(idspace * idspace);
  std::vector<std::vector<const Face*>> row_faces(idspace * idspace);
  for (const auto& u : verts)
    for (const auto& v : verts) {
      if (!g.adjacent(u, v)) continue;
      auto& slot = rows[vid(u) * idspace + vid(v)];
      auto& fslot = row_faces[vid(u) * idspace + vid(v)];
      for (const auto& f : faces)
        if (f.has_edge(u, v)) {
          slot.push_back(rotate(g, f, OrientedEdge{u, v}).images());
          fslot.push_back(&f);
        }
    }

  std::uint64_t evaluated = 0;
  std::vector<int> walk;       // vertex ids
  std::vector<Vertex> walkv;   // vertices
  std::vector<std::vector<int>> prefix(static_cast<std::size_t>(max_len) + 1);
  for (auto& p : prefix) p.resize(n);

  std::vector<int> choice;  // face pick per step, for counterexamples

  // compose every face choice along a fixed closed walk
  std::function<bool(int)> sweep = [&](int step) -> bool {
    const int len = static_cast<int>(walkv.size()) - 1;
    if (step == len) {
      ++evaluated;
      // parity of the accumulated images
      const std::vector<int>& img = prefix[step];
      int transpositions = 0;
      unsigned seen = 0;
      for (int i = 0; i < n; ++i) {
        if (seen & (1u << i)) continue;
        int len_c = 0;
        for (int j = i; !(seen & (1u << j)); j = img[j] - 1) {
          seen |= 1u << j;
          ++len_c;
        }
        transpositions += len_c - 1;
      }
      if (transpositions % 2 != 0) {
        SpinChain bad{walkv.front(), walkv, {}};
        for (int t = 0; t < len; ++t)
          bad.faces.push_back(*row_faces[walk[t] * idspace + walk[t + 1]][choice[t]]);
        fail(out, {{"what", "odd chain"}, {"chain", chain_json_brief(bad)}});
        return false;
      }
      return true;
    }
    const auto& opts = rows[walk[step] * idspace + walk[step + 1]];
    for (std::size_t c = 0; c < opts.size(); ++c) {
      const auto& row = opts[c];
      for (int i = 0; i < n; ++i) prefix[step + 1][i] = row[prefix[step][i] - 1];
      choice[step] = static_cast<int>(c);
      if (!sweep(step + 1)) return false;
    }
    return true;
  };

  std::function<bool(const Vertex&, int)> extend = [&](const Vertex& at, int remaining) -> bool {
    if (remaining == 0) {
      if (!(at == walkv.front())) return true;
      for (int i = 0; i < n; ++i) prefix[0][i] = i + 1;
      choice.assign(walkv.size() - 1, 0);
      walk.clear();
      for (const auto& v : walkv) walk.push_back(vid(v));
      return sweep(0);
    }
    for (const auto& w : g.neighbors_ordered(at)) {
      walkv.push_back(w);
      bool ok = extend(w, remaining - 1);
      walkv.pop_back();
      if (!ok) return false;
    }
    return true;
  };

  for (int len = 2; len <= max_len; ++len) {
    if (g.kind() == GraphKind::Standard && len % 2 != 0) continue;
    for (const auto& base : verts) {
      walkv.assign(1, base);
      if (!extend(base, len)) {
        out.notes["chains_evaluated"] = evaluated;
        return out;
      }
    }
  }
  out.notes["chains_evaluated"] = evaluated;
  return out;
}

CheckOutcome chains_even_random(const SpinGraph& g, std::uint64_t seed, int count) {
  CheckOutcome out;
  auto faces = enumerate_faces(g);
  RotationTable table(g);
  const Vertex base{0, false};
  const int even_lengths[] = {2, 4, 6, 8, 10, 12};
  const int any_lengths[] = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  for (int i = 0; i < count; ++i) {
    int length = g.kind() == GraphKind::Standard ? even_lengths[i % 6] : any_lengths[i % 10];
    SpinChain w = random_chain(g, base, length, seed + static_cast<std::uint64_t>(i), faces);
    Permutation acc = Permutation::identity(g.genus());
    for (std::size_t t = 0; t + 1 < w.loop.size(); ++t)
      acc = compose(table.get(w.faces[t], w.loop[t], w.loop[t + 1]), acc);
    if (sign(acc) != +1) {
      fail(out, {{"what", "odd chain"}, {"chain", chain_json_brief(w)}});
      return out;
    }
  }
  out.notes["chains_evaluated"] = count;
  return out;
}

CheckOutcome check_lemma6(const CheckContext& ctx) {
  SpinGraph g = build_graph(ctx.genus, ctx.kind);
  if (ctx.genus <= 5) {
    CheckOutcome out = chains_even_exhaustive(g, 4);
    out.notes["mode"] = "exhaustive<=4";
    return out;
  }
  CheckOutcome out = chains_even_random(g, ctx.seed, 10000);
  out.notes["mode"] = "random";
  return out;
}

// ---------------------------------------------------------------- groups

CheckOutcome check_group_alternating(const CheckContext& ctx) {
  CheckOutcome out;
  const int n = ctx.genus;
  SpinGraph g = build_graph(n, ctx.kind);
  std::vector<Vertex> bases;
  if (n <= 5) {
    bases = g.vertices();
  } else if (n <= 8) {
    bases = {Vertex{0, false}, Vertex{1, false}};
    if (ctx.kind == GraphKind::Standard) bases.push_back(Vertex{0, true});
  } else {
    bases = {Vertex{0, false}};
  }
  out.notes["bases"] = bases.size();
  for (const auto& base : bases) {
    SpinGroupResult res = spin_group(g, base);
    if (!res.all_generators_even) {
      fail(out, {{"what", "odd generator"}, {"base", to_label(base)}});
      continue;
    }
    if (n <= 20) {
      std::uint64_t expect = factorial(n) / 2;
      if (res.group.order() != expect || !res.certified_alternating)
        fail(out, {{"what", "group order"},
                   {"base", to_label(base)},
                   {"expected", expect},
                   {"got", res.group.order()}});
      if (const auto* elems = res.group.elements()) {
        for (const auto& p : *elems)
          if (sign(p) != +1) {
            fail(out, {{"what", "odd element"}, {"base", to_label(base)},
                       {"element", cycle_string(p)}});
            break;
          }
      }
      out.notes["mode"] = n <= kClosureDegreeLimit ? "closure" : "stabilizer-chain";
    } else {
      out.notes["mode"] = "parity-only";
    }
  }
  return out;
}

CheckOutcome check_corollary1(const CheckContext& ctx) {
  CheckOutcome out;
  SpinGraph g = build_graph(3, ctx.kind);
  for (const auto& base : g.vertices()) {
    SpinGroupResult res = spin_group(g, base);
    if (res.group.order() != 3 || !res.certified_alternating)
      fail(out, {{"what", "genus-3 group order"},
                 {"base", to_label(base)},
                 {"got", res.group.order()}});
  }
  return out;
}

CheckOutcome check_eq61(const CheckContext& ctx) {
  CheckOutcome out;
  const int n = ctx.genus;
  SpinGraph g = build_graph(n, ctx.kind);
  const Vertex hub{0, false}, last{n, false};
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Face fi = Face::of(g, {hub, Vertex{i, false}, last});
      Face fj = Face::of(g, {hub, Vertex{j, false}, last});
      SpinChain chain{hub, {hub, last, hub}, {fi, fj}};
      Permutation got = evaluate_chain(g, chain);
      Permutation expect = Permutation::from_cycles(n, {{i, j, n}});
      if (!(got == expect))
        fail(out, {{"what", "cell generator"},
                   {"i", i},
                   {"j", j},
                   {"expected", cycle_string(expect)},
                   {"got", cycle_string(got)}});
    }
  return out;
}

// ------------------------------------------------------------- section 5

CheckOutcome check_section5(const CheckContext& ctx) {
  CheckOutcome out;
  const int n = ctx.genus;
  SpinGraph g = build_graph(n, ctx.kind);
  const auto verts = g.vertices();
  for (const auto& q : verts)
    for (const auto& r : verts) {
      if (q == r) continue;
      CanonicalPath path = canonical_path(g, q, r);
      std::size_t expect_len;
      if (g.adjacent(q, r))
        expect_len = 2;
      else if (r == conjugate(q))
        expect_len = 4;
      else
        expect_len = 3;
      if (path.waypoints.size() != expect_len || !(path.waypoints.front() == q) ||
          !(path.waypoints.back() == r))
        fail(out, {{"what", "path shape"},
                   {"pair", {to_label(q), to_label(r)}},
                   {"expected_waypoints", expect_len},
                   {"got", path.waypoints.size()}});
      if (path.faces.size() + 1 != path.waypoints.size())
        fail(out, {{"what", "face count"}, {"pair", {to_label(q), to_label(r)}}});
      for (std::size_t t = 0; t + 1 < path.waypoints.size(); ++t) {
        if (!g.adjacent(path.waypoints[t], path.waypoints[t + 1]))
          fail(out, {{"what", "path step not an edge"},
                     {"pair", {to_label(q), to_label(r)}}});
        if (!path.faces[t].has_edge(path.waypoints[t], path.waypoints[t + 1]))
          fail(out, {{"what", "face misses its edge"},
                     {"pair", {to_label(q), to_label(r)}}});
      }
      // sign of the transport permutation telescopes the edge sign law
      Permutation sigma = path_permutation(g, q, r);
      if (sign(sigma) != orientation_weight(g, q) * orientation_weight(g, r))
        fail(out, {{"what", "path sign"}, {"pair", {to_label(q), to_label(r)}}});
      // where the reverse path picks the same faces, it inverts exactly
      if (g.adjacent(q, r)) {
        CanonicalPath back = canonical_path(g, r, q);
        if (back.faces == std::vector<Face>{path.faces[0]} &&
            !(path_permutation(g, r, q) == sigma.inverse()))
          fail(out, {{"what", "reverse path not inverse"},
                     {"pair", {to_label(q), to_label(r)}}});
      }
    }
  return out;
}

CheckOutcome check_eq51(const CheckContext& ctx) {
  CheckOutcome out;
  const int n = ctx.genus;
  SpinGraph g = build_graph(n, ctx.kind);
  auto faces = enumerate_faces(g);
  RotationTable table(g);
  auto eval = [&](const SpinChain& w) {
    Permutation acc = Permutation::identity(n);
    for (std::size_t t = 0; t + 1 < w.loop.size(); ++t)
      acc = compose(table.get(w.faces[t], w.loop[t], w.loop[t + 1]), acc);
    return acc;
  };

  const auto verts = g.vertices();
  std::vector<Vertex> sources, targets;
  if (n <= 6) {
    sources = verts;
    targets = verts;
  } else {
    // one representative source and a target in each of the three path cases
    sources = {Vertex{0, false}};
    targets = {Vertex{1, false}, Vertex{0, true}, Vertex{1, true}, Vertex{2, true}};
  }
  const std::size_t gen_cap = n <= 4 ? SIZE_MAX : 40;
  int random_per_pair = 10;

  std::map<Vertex, SpinGroupResult> groups;
  for (const auto& v : sources) groups.emplace(v, spin_group(g, v));
  for (const auto& v : targets)
    if (!groups.count(v)) groups.emplace(v, spin_group(g, v));

  for (const auto& q : sources) {
    const auto& gens = groups.at(q).generators;
    for (const auto& r : targets) {
      if (q == r) continue;
      Permutation sigma = path_permutation(g, q, r);
      Permutation sigma_inv = sigma.inverse();
      std::size_t used = 0;
      for (const auto& [w, p] : gens) {
        if (used++ >= gen_cap) break;
        SpinChain moved = transport_chain(g, q, r, w);
        if (!validate_chain(g, moved).ok() || !(moved.base == r)) {
          fail(out, {{"what", "transported chain invalid"},
                     {"pair", {to_label(q), to_label(r)}}});
          break;
        }
        Permutation lhs = eval(moved);
        Permutation rhs = compose(sigma, compose(p, sigma_inv));
        if (!(lhs == rhs)) {
          fail(out, {{"what", "conjugation identity"},
                     {"pair", {to_label(q), to_label(r)}},
                     {"chain", chain_json_brief(w)},
                     {"expected", cycle_string(rhs)},
                     {"got", cycle_string(lhs)}});
          break;
        }
      }
      for (int i = 0; i < random_per_pair; ++i) {
        SpinChain w = random_chain(g, q, 2 + 2 * (i % 4), ctx.seed + 977 * i, faces);
        SpinChain moved = transport_chain(g, q, r, w);
        Permutation lhs = eval(moved);
        Permutation rhs = compose(sigma, compose(eval(w), sigma_inv));
        if (!(lhs == rhs))
          fail(out, {{"what", "conjugation identity (random chain)"},
                     {"pair", {to_label(q), to_label(r)}}});
      }
      // the conjugated group lands exactly on the spin group at r
      std::vector<Permutation> mapped;
      for (const auto& [w, p] : gens) mapped.push_back(compose(sigma, compose(p, sigma_inv)));
      PermGroup image(n, mapped);
      const PermGroup& target = groups.at(r).group;
      if (image.order() != target.order() || image.order() != groups.at(q).group.order())
        fail(out, {{"what", "conjugated order"}, {"pair", {to_label(q), to_label(r)}}});
      if (!image.same_group(target))
        fail(out, {{"what", "conjugated group differs"},
                   {"pair", {to_label(q), to_label(r)}}});
      // conjugation respects products
      if (mapped.size() >= 2) {
        const Permutation& a = gens.front().second;
        const Permutation& b = gens.back().second;
        Permutation ad_ab = compose(sigma, compose(compose(a, b), sigma_inv));
        Permutation ab_ad = compose(mapped.front(), mapped.back());
        if (!(ad_ab == ab_ad))
          fail(out, {{"what", "conjugation not multiplicative"},
                     {"pair", {to_label(q), to_label(r)}}});
      }
    }
  }
  out.notes["sources"] = sources.size();
  return out;
}

// -------------------------------------------------------------- spectator

CheckOutcome check_spectator(const CheckContext& ctx) {
  CheckOutcome out;
  SpinGraph g = build_graph(ctx.genus, ctx.kind);
  auto faces = enumerate_faces(g);
  std::size_t cap = ctx.genus <= 6 ? faces.size() : 200;
  for (std::size_t i = 0; i < faces.size() && i < cap; ++i) {
    const Face& f = faces[i];
    const auto& cyc = f.cycle();
    auto classes = f.classes();
    for (int t = 0; t < f.size(); ++t) {
      Vertex from = cyc[t], to = cyc[(t + 1) % f.size()];
      Permutation p = rotate(g, f, OrientedEdge{from, to});
      for (int cls = 0; cls <= ctx.genus; ++cls) {
        if (cls == from.cls || std::count(classes.begin(), classes.end(), cls)) continue;
        int src = g.neighbor_position(from, g.neighbor_in_class(from, cls));
        Vertex landed = g.neighbor_at(to, p.apply(src));
        if (landed.cls != cls)
          fail(out, {{"what", "spectator moved class"},
                     {"face", face_json(f)},
                     {"edge", {to_label(from), to_label(to)}},
                     {"class", cls}});
      }
    }
  }
  return out;
}

// ------------------------------------------------------------ containment

CheckOutcome check_containment(const CheckContext& ctx) {
  CheckOutcome out;
  SpinGraph g = build_graph(ctx.genus, ctx.kind);
  auto faces = enumerate_faces(g);
  const Vertex base{0, false};
  SpinGroupResult res = spin_group(g, base);
  int count = 50;
  for (int i = 0; i < count; ++i) {
    int length = g.kind() == GraphKind::Standard ? 2 + 2 * (i % 5) : 2 + (i % 8);
    SpinChain w = random_chain(g, base, length, ctx.seed + 31 * i, faces);
    Permutation p = evaluate_chain(g, w);
    if (!res.group.contains(p)) {
      fail(out, {{"what", "chain escapes the generated group"},
                 {"chain", chain_json_brief(w)},
                 {"value", cycle_string(p)}});
      return out;
    }
    // concatenation evaluates to the composite, making the chain values a group
    SpinChain other = random_chain(g, base, 4, ctx.seed + 7919 * i, faces);
    SpinChain joined = concat_chains(w, other);
    if (!(evaluate_chain(g, joined) == compose(evaluate_chain(g, other), p)))
      fail(out, {{"what", "concatenation is not composition"},
                 {"chain", chain_json_brief(w)}});
  }
  out.notes["chains"] = count;
  return out;
}

}  // namespace

namespace detail {

CheckOutcome parity_suite(const SpinGraph& g, const RotationFn& rot, int face_cap) {
  return parity_suite_impl(g, rot, face_cap);
}

}  // namespace detail

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;
    v.push_back({"graph", "Section 2 (spin graph structure)", true, true, 0, check_graph});
    v.push_back({"permutations", "derived (permutation arithmetic laws)", true, false, 0,
                 check_permutation_laws});
    v.push_back({"rotations", "Section 3, Eqs. (3)-(4) (inverse, transitive rotations)", true,
                 true, 0, check_rotation_algebra});
    v.push_back({"lemma1", "Lemma 1 (edge-theta dictionary)", true, false, 0, check_lemma1});
    v.push_back({"lemma2", "Lemma 2 (face census)", true, false, 0, check_lemma2});
    v.push_back({"remark1", "Remark 1 (cells are standard graphs)", true, false, 0, check_remark1});
    v.push_back({"remark2", "Remark 2 (cell census)", true, false, 0, check_remark2});
    v.push_back({"section3", "Section 3 (genus-3 worked rotations)", true, false, 3, check_section3});
    v.push_back({"section4", "Section 4 (cell-lifted rotation formulas)", true, false, 0, check_section4});
    v.push_back({"pict1", "Lemma 3 proof (orientation weights)", true, false, 0, check_pict1});
    v.push_back({"lemma3", "Lemma 3 (parity face-independence, genus 3)", true, false, 3, check_lemma3});
    v.push_back({"lemma4", "Lemma 4 (opposite edges, genus-3 scope; sign product derived)",
                 true, false, 0, check_lemma4});
    v.push_back({"lemma5", "Lemma 5 (parity law, all genera)", true, false, 0, check_lemma5});
    v.push_back({"section6", "Section 6 (Weierstrass rotations)", false, true, 0, check_section6});
    v.push_back({"lemma6", "Lemma 6 (chains evaluate even)", true, true, 0, check_lemma6});
    v.push_back({"lemma7", "Lemma 7 (spin groups are alternating)", true, false, 0,
                 check_group_alternating});
    v.push_back({"corollary1", "Corollary 1 (genus-3 spin group)", true, false, 3,
                 check_corollary1});
    v.push_back({"lemma8", "Lemma 8 (Weierstrass spin groups)", false, true, 0,
                 check_group_alternating});
    v.push_back({"eq61", "Eq. (6.1) (Weierstrass cell generators)", false, true, 0, check_eq61});
    v.push_back({"section5", "Section 5 (canonical shortest paths)", true, false, 0,
                 check_section5});
    v.push_back({"eq51", "Eq. (5.1) (chain transport conjugation)", true, false, 0, check_eq51});
    v.push_back({"spectator", "Eq. (4.2) spectator rule (derived class-0 reading)", true, true,
                 0, check_spectator});
    v.push_back({"containment", "derived (chains land in the generated group)", true, true, 0,
                 check_containment});
    return v;
  }();
  return defs;
}

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const auto& def : check_registry()) out.push_back(def.id);
  return out;
}

bool VerificationReport::all_passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

VerificationReport run_verification(int genus_lo, int genus_hi,
                                    const std::vector<std::string>& filter,
                                    std::uint64_t seed, bool parallel) {
  if (genus_lo > genus_hi || genus_lo < 2)
    throw std::invalid_argument("bad genus range");
  const auto& registry = check_registry();
  std::set<std::string> wanted(filter.begin(), filter.end());
  const bool all = wanted.empty() || wanted.count("all");
  for (const auto& id : wanted)
    if (id != "all") {
      bool known = false;
      for (const auto& def : registry) known = known || def.id == id;
      if (!known) throw std::invalid_argument("unknown check '" + id + "'");
    }

  VerificationReport report;
  report.genus_lo = genus_lo;
  report.genus_hi = genus_hi;
  report.seed = seed;
  report.checks_requested = all ? std::vector<std::string>{"all"}
                                : std::vector<std::string>(wanted.begin(), wanted.end());

  struct Task {
    const CheckDef* def;
    CheckContext ctx;
  };
  std::vector<Task> tasks;
  for (const auto& def : registry) {
    if (!all && !wanted.count(def.id)) continue;
    for (GraphKind kind : {GraphKind::Standard, GraphKind::Weierstrass}) {
      if (kind == GraphKind::Standard && !def.standard) continue;
      if (kind == GraphKind::Weierstrass && !def.weierstrass) continue;
      int kind_min = kind == GraphKind::Standard ? 3 : 2;
      for (int genus = std::max(genus_lo, kind_min); genus <= genus_hi; ++genus) {
        if (def.only_genus != 0 && genus != def.only_genus) continue;
        std::uint64_t h = std::hash<std::string>{}(def.id);
        std::uint64_t task_seed = seed * 0x9E3779B97F4A7C15ULL ^ h ^
                                  (static_cast<std::uint64_t>(genus) << 32) ^
                                  (kind == GraphKind::Weierstrass ? 1 : 0);
        tasks.push_back({&def, CheckContext{genus, kind, task_seed}});
      }
    }
  }

  report.results.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      const Task& t = tasks[i];
      CheckResult r;
      r.id = t.def->id;
      r.reference = t.def->reference;
      r.genus = t.ctx.genus;
      r.kind = t.ctx.kind;
      auto t0 = std::chrono::steady_clock::now();
      try {
        CheckOutcome o = t.def->run(t.ctx);
        r.passed = o.passed;
        r.notes = std::move(o.notes);
        r.counterexample = std::move(o.counterexample);
      } catch (const std::exception& e) {
        r.passed = false;
        r.counterexample = {{"what", "exception"}, {"error", e.what()}};
      }
      auto t1 = std::chrono::steady_clock::now();
      r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      report.results[i] = std::move(r);
    }
  };

  unsigned pool = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  pool = std::min<unsigned>(pool, 8);
  if (pool <= 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < pool; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  return report;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["genus_range"] = {report.genus_lo, report.genus_hi};
  std::set<std::string> kinds;
  for (const auto& r : report.results) kinds.insert(to_string(r.kind));
  j["kinds"] = kinds;
  j["seed"] = report.seed;
  j["checks_requested"] = report.checks_requested;
  auto& checks = j["checks"] = ordered_json::array();
  int failed = 0;
  for (const auto& r : report.results) {
    ordered_json c;
    c["id"] = r.id;
    c["reference"] = r.reference;
    c["params"] = {{"genus", r.genus}, {"kind", to_string(r.kind)}};
    if (!r.notes.is_null()) c["params"]["notes"] = r.notes;
    c["status"] = r.passed ? "pass" : "fail";
    if (!r.passed) {
      c["counterexample"] = r.counterexample;
      ++failed;
    }
    checks.push_back(std::move(c));
  }
  j["summary"] = {{"total", report.results.size()},
                  {"failed", failed},
                  {"all_passed", report.all_passed()}};
  return j;
}

std::string report_table(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << (r.passed ? "PASS " : "FAIL ");
    os << r.id;
    for (std::size_t pad = r.id.size(); pad < 12; ++pad) os << ' ';
    os << to_string(r.kind) << " g=" << r.genus;
    os << "  [" << r.reference << "]";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "  %.1f ms", r.elapsed_ms);
    os << buf << "\n";
  }
  os << (report.all_passed() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
  return os.str();
}

}  // namespace spingraph
