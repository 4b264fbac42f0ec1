#include "spingraph/transport.hpp"

#include <algorithm>
#include <stdexcept>

namespace spingraph {

namespace {

// smallest index in {1..g} avoiding the listed ones
int min_index_excluding(int genus, std::initializer_list<int> used) {
  for (int i = 1; i <= genus; ++i)
    if (std::find(used.begin(), used.end(), i) == used.end()) return i;
  throw std::logic_error("no admissible index left");
}

}  // namespace

CanonicalPath canonical_path(const SpinGraph& g, const Vertex& q, const Vertex& r) {
  if (g.kind() != GraphKind::Standard)
    throw std::invalid_argument("canonical paths are defined on standard graphs only");
  g.require_vertex(q);
  g.require_vertex(r);
  if (q == r) throw std::invalid_argument("canonical path needs distinct endpoints");

  const int n = g.genus();
  auto nbr = [&](int i) { return g.neighbor_at(q, i); };

  CanonicalPath path{q, r, {}, {}};
  if (g.adjacent(q, r)) {
    // r = Q_i: one edge, face {Q, Q_i, ~Q_k, Q_l} with minimal l then k
    int i = g.neighbor_position(q, r);
    int l = min_index_excluding(n, {i});
    int k = min_index_excluding(n, {i, l});
    path.waypoints = {q, r};
    path.faces = {Face::of(g, {q, r, conjugate(nbr(k)), nbr(l)})};
    return path;
  }
  if (r != conjugate(q)) {
    // r = ~Q_j: two edges through Q_i with minimal i
    int j = g.neighbor_position(q, conjugate(r));
    int i = min_index_excluding(n, {j});
    int l = min_index_excluding(n, {i});
    int k = min_index_excluding(n, {i, l});
    int k2 = min_index_excluding(n, {i, j});
    path.waypoints = {q, nbr(i), r};
    path.faces = {Face::of(g, {q, nbr(i), conjugate(nbr(k)), nbr(l)}),
                  Face::of(g, {nbr(i), r, conjugate(q), conjugate(nbr(k2))})};
    return path;
  }
  // r = ~Q: three edges through Q_1 and ~Q_2
  path.waypoints = {q, nbr(1), conjugate(nbr(2)), r};
  path.faces = {Face::of(g, {q, nbr(1), conjugate(nbr(2)), nbr(3)}),
                Face::of(g, {nbr(1), conjugate(nbr(2)), conjugate(q), conjugate(nbr(3))}),
                Face::of(g, {conjugate(nbr(2)), conjugate(q), conjugate(nbr(1)), nbr(3)})};
  return path;
}

Permutation path_permutation(const SpinGraph& g, const Vertex& q, const Vertex& r) {
  CanonicalPath path = canonical_path(g, q, r);
  Permutation acc = Permutation::identity(g.genus());
  for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i)
    acc = compose(rotate(g, path.faces[i], OrientedEdge{path.waypoints[i], path.waypoints[i + 1]}),
                  acc);
  return acc;
}

SpinChain transport_chain(const SpinGraph& g, const Vertex& q, const Vertex& r,
                          const SpinChain& w) {
  ChainValidation v = validate_chain(g, w);
  if (!v.ok()) throw std::invalid_argument("invalid chain: " + v.message);
  if (w.base != q) throw std::invalid_argument("chain is not based at " + to_label(q));
  CanonicalPath path = canonical_path(g, q, r);

  SpinChain out{r, {}, {}};
  // r -> q along the reversed canonical path
  out.loop.assign(path.waypoints.rbegin(), path.waypoints.rend());
  out.faces.assign(path.faces.rbegin(), path.faces.rend());
  // around the original loop
  out.loop.insert(out.loop.end(), w.loop.begin() + 1, w.loop.end());
  out.faces.insert(out.faces.end(), w.faces.begin(), w.faces.end());
  // and back out to r
  out.loop.insert(out.loop.end(), path.waypoints.begin() + 1, path.waypoints.end());
  out.faces.insert(out.faces.end(), path.faces.begin(), path.faces.end());
  return out;
}

ConjugatedGroup conjugate_group(const SpinGraph& g, const Vertex& q, const Vertex& r) {
  Permutation sigma = path_permutation(g, q, r);
  Permutation sigma_inv = sigma.inverse();
  SpinGroupResult source = spin_group(g, q);
  std::vector<Permutation> from_gens, to_gens;
  for (const auto& [chain, p] : source.generators) {
    from_gens.push_back(p);
    to_gens.push_back(compose(sigma, compose(p, sigma_inv)));
  }
  PermGroup image(g.genus(), to_gens);
  return ConjugatedGroup{std::move(sigma), std::move(from_gens), std::move(to_gens),
                         std::move(image)};
}

}  // namespace spingraph
