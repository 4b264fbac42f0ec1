#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace spingraph {

// A node of a spin graph. Class 0 is the distinguished pair {P, ~P};
// class m >= 1 is the pair {P_m, ~P_m}. The flag selects the tilded
// member of the pair.
struct Vertex {
  int cls = 0;
  bool conjugated = false;

  friend bool operator==(const Vertex&, const Vertex&) = default;

  // Label order: untilded before tilded, then by class index.
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (a.conjugated != b.conjugated) return a.conjugated <=> b.conjugated;
    return a.cls <=> b.cls;
  }
};

inline Vertex conjugate(const Vertex& v) { return Vertex{v.cls, !v.conjugated}; }

// Text labels: "P", "~P", "P3", "~P3".
std::string to_label(const Vertex& v);

// Parses a label; throws std::invalid_argument on malformed input or a
// class index outside [0, genus].
Vertex parse_vertex(std::string_view label, int genus);

}  // namespace spingraph
