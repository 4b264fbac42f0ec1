#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "spingraph/permutation.hpp"

namespace spingraph {

// Degree up to which groups are realized by breadth-first set closure
// (|A_8| = 20160); a stabilizer chain takes over above it.
inline constexpr int kClosureDegreeLimit = 8;

// g! as an exact 64-bit integer; valid for g <= 20.
std::uint64_t factorial(int g);

// All elements of <gens> by breadth-first closure (identity included).
// Throws on an empty generator list or mixed degrees.
std::vector<Permutation> closure_elements(const std::vector<Permutation>& gens);
std::uint64_t closure_order(const std::vector<Permutation>& gens);

// Deterministic Schreier-Sims stabilizer chain with order and membership
// queries. Immutable once constructed.
class StabilizerChain {
 public:
  StabilizerChain(int degree, const std::vector<Permutation>& gens);

  int degree() const { return degree_; }
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

 private:
  struct Level {
    int base_point = 0;                          // 1-based
    std::vector<Permutation> gens;               // generators fixing all earlier base points
    std::vector<std::optional<Permutation>> rep; // rep[pt-1] maps base_point -> pt
    std::vector<int> orbit;                      // discovery order
  };

  void insert_generator(const Permutation& p);
  void rebuild_orbit(std::size_t level);
  void close_level(std::size_t level);
  // Sifts p through levels [start..); returns the residue and the level
  // at which it stuck (levels_.size() when it fixes every base point).
  std::pair<Permutation, std::size_t> strip(Permutation p, std::size_t start) const;

  int degree_;
  std::vector<Level> levels_;
};

std::uint64_t stabilizer_chain_order(const std::vector<Permutation>& gens);

// A finitely generated permutation group with exact order and membership
// queries. The backend (closure set or stabilizer chain, by degree) is
// built in the constructor, so concurrent const access is safe. An empty
// generator list yields the trivial group.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  const std::vector<Permutation>& generators() const { return gens_; }

  // Full element list; available only on the closure route.
  const std::vector<Permutation>* elements() const;

  bool same_group(const PermGroup& other) const;

 private:
  int degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<const std::vector<Permutation>> elements_;  // sorted
  std::shared_ptr<const StabilizerChain> chain_;
};

// Exact order of <gens>; throws on an empty list.
std::uint64_t group_order(const std::vector<Permutation>& gens);

// True iff every generator is even and |<gens>| = degree!/2.
bool is_alternating(const std::vector<Permutation>& gens, int degree);

// Incrementally grown group used to filter redundant generators: add()
// returns true only when the candidate enlarges the group so far.
class GroupAccumulator {
 public:
  explicit GroupAccumulator(int degree);

  bool contains(const Permutation& p) const;
  bool add(const Permutation& p);
  std::uint64_t order() const;
  const std::vector<Permutation>& generators() const { return gens_; }

 private:
  int degree_;
  bool use_closure_;
  std::vector<Permutation> gens_;
  std::set<Permutation> elements_;  // closure mode
  std::optional<StabilizerChain> chain_;
};

}  // namespace spingraph
