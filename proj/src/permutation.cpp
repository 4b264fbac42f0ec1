#include "spingraph/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace spingraph {

Permutation::Permutation(int degree) {
  if (degree < 0) throw std::invalid_argument("negative permutation degree");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("image table is not a bijection of {1..n}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cyc) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  for (const auto& c : cyc) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i];
      int to = c[(i + 1) % c.size()];
      if (from < 1 || from > degree)
        throw std::invalid_argument("cycle entry out of range");
      images[from - 1] = to;
    }
  }
  return Permutation(std::move(images));  // re-validates (rejects overlapping cycles)
}

int Permutation::apply(int point) const {
  if (point < 1 || point > degree())
    throw std::out_of_range("permutation applied outside {1..n}");
  return images_[point - 1];
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(degree());
  for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("composing permutations of different degrees");
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[i - 1] = p.apply(q.apply(i));
  return Permutation(std::move(images));
}

int sign(const Permutation& p) {
  // parity via cycle structure: each k-cycle contributes (-1)^(k-1)
  std::vector<bool> seen(p.degree(), false);
  int transpositions = 0;
  for (int i = 1; i <= p.degree(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0;
    int j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      j = p.apply(j);
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2 == 0) ? +1 : -1;
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.degree(), false);
  for (int i = 1; i <= p.degree(); ++i) {
    if (seen[i - 1]) continue;
    std::vector<int> c;
    int j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      c.push_back(j);
      j = p.apply(j);
    }
    if (c.size() > 1) out.push_back(std::move(c));
  }
  return out;  // traversal from 1 upward yields min-first cycles in min order
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  bool spaced = p.degree() > 9;
  for (const auto& c : cycles(p)) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0 && spaced) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace spingraph
