#include "spingraph/chain.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace spingraph {

ChainValidation validate_chain(const SpinGraph& g, const SpinChain& w) {
  if (w.loop.empty())
    return {ChainError::EmptyLoop, -1, "chain loop is empty"};
  if (!g.has_vertex(w.base))
    return {ChainError::UnknownVertex, -1, "base " + to_label(w.base) + " is not in the graph"};
  if (w.loop.front() != w.base || w.loop.back() != w.base)
    return {ChainError::NotClosed, -1, "loop must start and end at the base"};
  for (std::size_t i = 0; i < w.loop.size(); ++i)
    if (!g.has_vertex(w.loop[i]))
      return {ChainError::UnknownVertex, static_cast<int>(i),
              "vertex " + to_label(w.loop[i]) + " is not in the graph"};
  const std::size_t steps = w.loop.size() - 1;
  if (w.faces.size() != steps)
    return {ChainError::WrongFaceCount, -1,
            "need one face per edge (" + std::to_string(steps) + " edges, " +
                std::to_string(w.faces.size()) + " faces)"};
  for (std::size_t i = 0; i < steps; ++i) {
    if (!g.adjacent(w.loop[i], w.loop[i + 1]))
      return {ChainError::NonAdjacentStep, static_cast<int>(i),
              "step " + to_label(w.loop[i]) + "->" + to_label(w.loop[i + 1]) +
                  " is not an edge"};
    if (!w.faces[i].has_edge(w.loop[i], w.loop[i + 1]))
      return {ChainError::FaceMissingEdge, static_cast<int>(i),
              "face at step " + std::to_string(i) + " does not contain edge " +
                  to_label(w.loop[i]) + "-" + to_label(w.loop[i + 1])};
  }
  return {};
}

Permutation evaluate_chain(const SpinGraph& g, const SpinChain& w) {
  ChainValidation v = validate_chain(g, w);
  if (!v.ok()) throw std::invalid_argument("invalid chain: " + v.message);
  Permutation acc = Permutation::identity(g.genus());
  for (std::size_t i = 0; i + 1 < w.loop.size(); ++i)
    acc = compose(rotate(g, w.faces[i], OrientedEdge{w.loop[i], w.loop[i + 1]}), acc);
  return acc;
}

void for_each_basic_generator(
    const SpinGraph& g, const Vertex& base,
    const std::function<void(const SpinChain&, const Permutation&)>& fn) {
  g.require_vertex(base);
  const auto all_faces = enumerate_faces(g);
  RotationTable table(g);
  for (const Vertex& s : g.neighbors_ordered(base)) {
    std::vector<Face> edge_faces;
    for (const auto& f : all_faces)
      if (f.has_edge(base, s)) edge_faces.push_back(f);
    for (std::size_t i = 0; i < edge_faces.size(); ++i) {
      const Permutation& out = table.get(edge_faces[i], base, s);
      for (std::size_t j = i + 1; j < edge_faces.size(); ++j) {
        const Permutation& back = table.get(edge_faces[j], s, base);
        SpinChain chain{base, {base, s, base}, {edge_faces[i], edge_faces[j]}};
        fn(chain, compose(back, out));
      }
    }
  }
}

std::vector<std::pair<SpinChain, Permutation>> basic_generators(const SpinGraph& g,
                                                                const Vertex& base) {
  std::vector<std::pair<SpinChain, Permutation>> out;
  for_each_basic_generator(g, base, [&](const SpinChain& c, const Permutation& p) {
    out.emplace_back(c, p);
  });
  return out;
}

SpinGroupResult spin_group(const SpinGraph& g, const Vertex& base) {
  g.require_vertex(base);
  const int n = g.genus();
  GroupAccumulator acc(n);
  std::vector<std::pair<SpinChain, Permutation>> kept;
  std::set<Permutation> seen;
  std::uint64_t examined = 0;
  bool all_even = true;
  for_each_basic_generator(g, base, [&](const SpinChain& c, const Permutation& p) {
    ++examined;
    if (sign(p) != +1) all_even = false;
    if (!seen.insert(p).second) return;
    if (acc.add(p)) kept.emplace_back(c, p);
  });
  std::vector<Permutation> gens;
  for (const auto& [c, p] : kept) gens.push_back(p);
  PermGroup group(n, std::move(gens));
  bool certified = false;
  if (n <= 20) certified = all_even && group.order() == factorial(n) / 2;
  return SpinGroupResult{base, std::move(kept), std::move(group),
                         certified, examined, all_even};
}

namespace {

int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % n); }

// hop count between vertices; spin graphs have diameter <= 3
int graph_distance(const SpinGraph& g, const Vertex& a, const Vertex& b) {
  if (a == b) return 0;
  if (g.adjacent(a, b)) return 1;
  if (g.kind() == GraphKind::Weierstrass) return 1;  // complete graph
  // same side: conjugates are 3 apart, anything else 2
  return a.cls == b.cls ? 3 : 2;
}

bool can_close(const SpinGraph& g, const Vertex& at, const Vertex& base, int remaining) {
  int d = graph_distance(g, at, base);
  if (remaining < d) return false;
  if (g.kind() == GraphKind::Standard) return (remaining - d) % 2 == 0;
  // complete graphs close any slack except a single leftover self-step
  return !(at == base && remaining == 1);
}

}  // namespace

SpinChain random_chain(const SpinGraph& g, const Vertex& base, int length, std::uint64_t seed) {
  return random_chain(g, base, length, seed, enumerate_faces(g));
}

SpinChain random_chain(const SpinGraph& g, const Vertex& base, int length, std::uint64_t seed,
                       const std::vector<Face>& all_faces) {
  g.require_vertex(base);
  if (length < 2)
    throw std::invalid_argument("chains need at least 2 edges");
  if (g.kind() == GraphKind::Standard && length % 2 != 0)
    throw std::invalid_argument("standard graphs have no odd closed walks (genus " +
                                std::to_string(g.genus()) + ", length " +
                                std::to_string(length) + ")");
  std::mt19937_64 rng(seed);

  SpinChain chain{base, {base}, {}};
  Vertex at = base;
  for (int step = 0; step < length; ++step) {
    std::vector<Vertex> options;
    for (const Vertex& w : g.neighbors_ordered(at))
      if (can_close(g, w, base, length - step - 1)) options.push_back(w);
    if (options.empty()) throw std::logic_error("random walk cannot close");
    Vertex next = options[pick(rng, static_cast<int>(options.size()))];
    std::vector<const Face*> through;
    for (const auto& f : all_faces)
      if (f.has_edge(at, next)) through.push_back(&f);
    chain.loop.push_back(next);
    chain.faces.push_back(*through[pick(rng, static_cast<int>(through.size()))]);
    at = next;
  }
  return chain;
}

SpinChain concat_chains(const SpinChain& a, const SpinChain& b) {
  if (a.base != b.base) throw std::invalid_argument("concatenating chains at different bases");
  SpinChain out = a;
  out.loop.insert(out.loop.end(), b.loop.begin() + 1, b.loop.end());
  out.faces.insert(out.faces.end(), b.faces.begin(), b.faces.end());
  return out;
}

}  // namespace spingraph
