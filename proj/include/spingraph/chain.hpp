#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "spingraph/graph.hpp"
#include "spingraph/perm_group.hpp"
#include "spingraph/rotation.hpp"

namespace spingraph {

// A based loop with one face chosen per edge. The trivial chain is a
// single-entry loop with no faces.
struct SpinChain {
  Vertex base;
  std::vector<Vertex> loop;  // [base, Q_1, ..., Q_N, base]
  std::vector<Face> faces;   // faces[t] contains edge (loop[t], loop[t+1])
};

enum class ChainError {
  None,
  EmptyLoop,
  NotClosed,
  UnknownVertex,
  NonAdjacentStep,
  WrongFaceCount,
  FaceMissingEdge,
};

struct ChainValidation {
  ChainError error = ChainError::None;
  int index = -1;  // offending step, when applicable
  std::string message;
  bool ok() const { return error == ChainError::None; }
};

ChainValidation validate_chain(const SpinGraph& g, const SpinChain& w);

// Composition of the face rotations along the loop, first edge applied
// first. Lemma 6's contract: the result is always even.
Permutation evaluate_chain(const SpinGraph& g, const SpinChain& w);

// All two-edge chains {base, S, base; F1, F2} over neighbors S and
// unordered pairs of distinct faces through the edge, with their
// evaluations. These generate the spin group.
std::vector<std::pair<SpinChain, Permutation>> basic_generators(const SpinGraph& g,
                                                                const Vertex& base);

// Streaming form of basic_generators for large genus.
void for_each_basic_generator(const SpinGraph& g, const Vertex& base,
                              const std::function<void(const SpinChain&, const Permutation&)>& fn);

struct SpinGroupResult {
  Vertex base;
  // chains that enlarged the group, in enumeration order; every basic
  // generator not listed was verified to lie in the group they generate
  std::vector<std::pair<SpinChain, Permutation>> generators;
  PermGroup group;
  bool certified_alternating = false;
  std::uint64_t chains_examined = 0;
  bool all_generators_even = false;
};

// The group generated by all basic generator chains at `base`.
// Certification (order == genus!/2) runs for genus <= 20; above that only
// the parity of the generators is checked.
SpinGroupResult spin_group(const SpinGraph& g, const Vertex& base);

// A valid random chain of `length` edges, deterministic in the seed.
// Standard graphs require an even length (their loops alternate sides).
SpinChain random_chain(const SpinGraph& g, const Vertex& base, int length, std::uint64_t seed);
// Same, against a precomputed enumerate_faces(g) list.
SpinChain random_chain(const SpinGraph& g, const Vertex& base, int length, std::uint64_t seed,
                       const std::vector<Face>& all_faces);

// Concatenation of two chains at the same base.
SpinChain concat_chains(const SpinChain& a, const SpinChain& b);

}  // namespace spingraph
