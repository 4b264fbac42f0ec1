#include "spingraph/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace spingraph {

std::uint64_t factorial(int g) {
  if (g < 0 || g > 20) throw std::invalid_argument("factorial defined for 0..20 here");
  std::uint64_t f = 1;
  for (int i = 2; i <= g; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

namespace {

void require_uniform_degree(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  for (const auto& g : gens)
    if (g.degree() != gens.front().degree())
      throw std::invalid_argument("generators of mixed degree");
}

int min_moved_point(const Permutation& p) {
  for (int i = 1; i <= p.degree(); ++i)
    if (p.apply(i) != i) return i;
  return 0;
}

}  // namespace

std::vector<Permutation> closure_elements(const std::vector<Permutation>& gens) {
  require_uniform_degree(gens);
  const int n = gens.front().degree();
  std::set<Permutation> seen;
  std::deque<Permutation> frontier;
  seen.insert(Permutation::identity(n));
  frontier.push_back(Permutation::identity(n));
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation next = compose(g, cur);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::uint64_t closure_order(const std::vector<Permutation>& gens) {
  return static_cast<std::uint64_t>(closure_elements(gens).size());
}

StabilizerChain::StabilizerChain(int degree, const std::vector<Permutation>& gens)
    : degree_(degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    insert_generator(g);
  }
}

void StabilizerChain::insert_generator(const Permutation& p) {
  if (p.is_identity()) return;
  auto [residue, level] = strip(p, 0);
  if (residue.is_identity()) return;
  if (level == levels_.size()) {
    Level fresh;
    fresh.base_point = min_moved_point(residue);
    levels_.push_back(std::move(fresh));
  }
  // <gens + p> = <gens + residue>: the residue differs from p by a prefix of
  // transversal representatives, and it fixes every base point before `level`,
  // so it is a generator of each stabilizer down to that level.
  for (std::size_t k = 0; k <= level; ++k) levels_[k].gens.push_back(residue);
  for (std::size_t k = level + 1; k-- > 0;) close_level(k);
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& L = levels_[level];
  L.rep.assign(degree_, std::nullopt);
  L.orbit.clear();
  L.rep[L.base_point - 1] = Permutation::identity(degree_);
  L.orbit.push_back(L.base_point);
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    int pt = L.orbit[head];
    for (const auto& s : L.gens) {
      int img = s.apply(pt);
      if (!L.rep[img - 1]) {
        L.rep[img - 1] = compose(s, *L.rep[pt - 1]);
        L.orbit.push_back(img);
      }
    }
  }
}

// Processes every Schreier generator of this level, pushing any residue
// into the deeper chain. The level's own generators never change here, so
// one scan over a snapshot suffices; deeper levels are re-closed as they
// grow. Assumes all deeper levels are complete on entry.
void StabilizerChain::close_level(std::size_t level) {
  rebuild_orbit(level);
  const std::vector<int> orbit = levels_[level].orbit;
  const std::size_t gen_count = levels_[level].gens.size();
  for (int pt : orbit) {
    for (std::size_t si = 0; si < gen_count; ++si) {
      Permutation schreier;
      {
        // levels_ may reallocate below; do not hold references across it
        const Level& L = levels_[level];
        const Permutation& s = L.gens[si];
        const Permutation& u = *L.rep[pt - 1];
        const Permutation& v = *L.rep[s.apply(pt) - 1];
        schreier = compose(v.inverse(), compose(s, u));
      }
      if (schreier.is_identity()) continue;
      auto [residue, at] = strip(std::move(schreier), level + 1);
      if (residue.is_identity()) continue;
      if (at == levels_.size()) {
        Level fresh;
        fresh.base_point = min_moved_point(residue);
        levels_.push_back(std::move(fresh));
      }
      for (std::size_t k = level + 1; k <= at; ++k) levels_[k].gens.push_back(residue);
      for (std::size_t k = at + 1; k-- > level + 1;) close_level(k);
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation p,
                                                           std::size_t start) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    int img = p.apply(L.base_point);
    if (img == L.base_point) continue;
    if (L.rep.empty() || !L.rep[img - 1]) return {std::move(p), i};
    p = compose(L.rep[img - 1]->inverse(), p);
  }
  return {std::move(p), levels_.size()};
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (const auto& L : levels_) {
    std::uint64_t sz = static_cast<std::uint64_t>(L.orbit.size());
    if (sz != 0 && n > UINT64_MAX / sz) throw std::overflow_error("group order exceeds 64 bits");
    n *= sz;
  }
  return n;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = strip(p, 0);
  (void)level;
  return residue.is_identity();
}

std::uint64_t stabilizer_chain_order(const std::vector<Permutation>& gens) {
  require_uniform_degree(gens);
  return StabilizerChain(gens.front().degree(), gens).order();
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  if (degree_ <= kClosureDegreeLimit) {
    auto elems = gens_.empty() ? std::vector<Permutation>{Permutation::identity(degree_)}
                               : closure_elements(gens_);
    elements_ = std::make_shared<const std::vector<Permutation>>(std::move(elems));
  } else {
    chain_ = std::make_shared<const StabilizerChain>(degree_, gens_);
  }
}

std::uint64_t PermGroup::order() const {
  if (elements_) return static_cast<std::uint64_t>(elements_->size());
  return chain_->order();
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  if (elements_) return std::binary_search(elements_->begin(), elements_->end(), p);
  return chain_->contains(p);
}

const std::vector<Permutation>* PermGroup::elements() const {
  return elements_ ? elements_.get() : nullptr;
}

bool PermGroup::same_group(const PermGroup& other) const {
  if (degree_ != other.degree_ || order() != other.order()) return false;
  for (const auto& g : gens_)
    if (!other.contains(g)) return false;
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

std::uint64_t group_order(const std::vector<Permutation>& gens) {
  require_uniform_degree(gens);
  const int n = gens.front().degree();
  if (n <= kClosureDegreeLimit) return closure_order(gens);
  return stabilizer_chain_order(gens);
}

bool is_alternating(const std::vector<Permutation>& gens, int degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree) return false;
    if (sign(g) != +1) return false;
  }
  return PermGroup(degree, gens).order() == factorial(degree) / 2;
}

GroupAccumulator::GroupAccumulator(int degree)
    : degree_(degree), use_closure_(degree <= kClosureDegreeLimit) {
  if (use_closure_) elements_.insert(Permutation::identity(degree_));
}

bool GroupAccumulator::contains(const Permutation& p) const {
  if (use_closure_) return elements_.count(p) != 0;
  if (!chain_) return p.is_identity();
  return chain_->contains(p);
}

bool GroupAccumulator::add(const Permutation& p) {
  if (contains(p)) return false;
  gens_.push_back(p);
  if (use_closure_) {
    auto elems = closure_elements(gens_);
    elements_ = std::set<Permutation>(elems.begin(), elems.end());
  } else {
    chain_.emplace(degree_, gens_);
  }
  return true;
}

std::uint64_t GroupAccumulator::order() const {
  if (use_closure_) return static_cast<std::uint64_t>(elements_.size());
  if (!chain_) return 1;
  return chain_->order();
}

}  // namespace spingraph
