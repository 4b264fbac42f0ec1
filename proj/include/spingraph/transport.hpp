#pragma once

#include <vector>

#include "spingraph/chain.hpp"
#include "spingraph/graph.hpp"
#include "spingraph/perm_group.hpp"
#include "spingraph/permutation.hpp"

namespace spingraph {

// The canonical shortest path between two vertices of a standard graph,
// with the canonical face chosen along each edge. One edge when the
// target is a neighbor, two when it is the conjugate of a neighbor, three
// when it is the conjugate of the source.
struct CanonicalPath {
  Vertex from;
  Vertex to;
  std::vector<Vertex> waypoints;  // includes both endpoints
  std::vector<Face> faces;        // one per edge
};

CanonicalPath canonical_path(const SpinGraph& g, const Vertex& q, const Vertex& r);

// Composition of the rotations along the canonical path, first edge
// applied first.
Permutation path_permutation(const SpinGraph& g, const Vertex& q, const Vertex& r);

// Rebase a chain from q to r: travel the canonical path backwards from r
// to q, run the chain, and return. Evaluates to the conjugate of the
// original evaluation by the path permutation.
SpinChain transport_chain(const SpinGraph& g, const Vertex& q, const Vertex& r,
                          const SpinChain& w);

struct ConjugatedGroup {
  Permutation conjugator;   // the path permutation q -> r
  std::vector<Permutation> source_generators;
  std::vector<Permutation> mapped_generators;  // conjugated by the path permutation
  PermGroup group;          // generated by the mapped generators, based at r
};

// The conjugation isomorphism applied to the spin group at q; its image
// equals the spin group at r.
ConjugatedGroup conjugate_group(const SpinGraph& g, const Vertex& q, const Vertex& r);

}  // namespace spingraph
