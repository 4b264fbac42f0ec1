#pragma once

#include <compare>
#include <string>
#include <vector>

namespace spingraph {

// A bijection of {1..g}. All interfaces are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);               // identity
  explicit Permutation(std::vector<int> images);  // images[i-1] = image of i

  static Permutation identity(int degree) { return Permutation(degree); }
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const;
  int operator()(int point) const { return apply(point); }

  bool is_identity() const;
  Permutation inverse() const;

  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// compose(p, q) applies q first: compose(p, q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

// Parity of the permutation, +1 or -1.
int sign(const Permutation& p);

// Cycle decomposition: fixed points omitted, each cycle starting at its
// minimum, cycles sorted by minimum.
std::vector<std::vector<int>> cycles(const Permutation& p);

// Cycle notation, e.g. "(132)" or "(1 3 12)" when an entry has more than
// one digit; the identity prints as "".
std::string cycle_string(const Permutation& p);

}  // namespace spingraph
