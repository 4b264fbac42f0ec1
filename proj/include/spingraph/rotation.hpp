#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>

#include "spingraph/graph.hpp"
#include "spingraph/permutation.hpp"

namespace spingraph {

struct OrientedEdge {
  Vertex from;
  Vertex to;
};

// The neighbor positions of `vertex` that fall inside a cell, ascending.
// For a 3-cell containing the vertex these are exactly three slots; they
// realize the cell-local index sets used to lift the genus-3 rotation rule
// to arbitrary genus.
struct CellLocalOrdering {
  Vertex vertex;
  Cell cell;
  std::array<int, 3> slots;  // 1-based neighbor positions, ascending

  static CellLocalOrdering of(const SpinGraph& g, const Vertex& v, const Cell& c);
  int rank_of_position(int position) const;  // 0..2
};

// The permutation induced by a face along one of its oriented edges:
// neighbors outside the face's cell map class-to-class (the hub counting
// as class 0), and the three in-cell slots follow the quadrangle rule
// lifted through the cell-local orderings. For Weierstrass triangles the
// two in-cell slots swap through the third vertex.
Permutation rotate(const SpinGraph& g, const Face& f, const OrientedEdge& e);

// The face-induced permutation between any two vertices of a face,
// composed along the perimeter; both perimeter routes agree.
Permutation face_permutation(const SpinGraph& g, const Face& f, const Vertex& from,
                             const Vertex& to);

// +1 or -1 per vertex of a standard graph: +1 for the hub, alternating in
// the class index for leaves, negated under conjugation. The sign of any
// face rotation along an edge equals the product of its endpoint weights.
int orientation_weight(const SpinGraph& g, const Vertex& v);

enum class Direction { Clockwise, CounterClockwise };

// Composition of the rotations along the full perimeter starting at
// `start`; equal to the identity for every face.
Permutation perimeter_composition(const SpinGraph& g, const Face& f, const Vertex& start,
                                  Direction dir);

// Memo table of rotations on one graph. Not synchronized; use one
// instance per thread.
class RotationTable {
 public:
  explicit RotationTable(const SpinGraph& g) : graph_(g) {}
  const Permutation& get(const Face& f, const Vertex& from, const Vertex& to);

 private:
  const SpinGraph& graph_;
  std::unordered_map<std::uint64_t, Permutation> memo_;
};

}  // namespace spingraph
