#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spingraph/vertex.hpp"

namespace spingraph {

enum class GraphKind { Standard, Weierstrass };

std::string to_string(GraphKind kind);
GraphKind parse_kind(std::string_view s);

class SpinGraph;

// A face of a spin graph: a quadrangle (standard) or triangle
// (Weierstrass), stored in its canonical traversal order.
class Face {
 public:
  // Validates the vertex set against the graph and canonicalizes the
  // traversal; throws std::invalid_argument when the set is not a face.
  static Face of(const SpinGraph& g, std::vector<Vertex> verts);

  int size() const { return static_cast<int>(cycle_.size()); }
  const std::vector<Vertex>& cycle() const { return cycle_; }
  bool contains(const Vertex& v) const;
  // True when (a, b) is an edge of the face perimeter.
  bool has_edge(const Vertex& a, const Vertex& b) const;
  // The perimeter neighbor of v other than `exclude`.
  Vertex cycle_neighbor(const Vertex& v, const Vertex& exclude) const;
  std::vector<int> classes() const;  // sorted class indices, one per vertex

  friend bool operator==(const Face&, const Face&) = default;
  friend std::strong_ordering operator<=>(const Face&, const Face&) = default;

 private:
  std::vector<Vertex> cycle_;
};

// An n-cell: the induced sub-spin-graph on `retained` conjugacy classes.
struct Cell {
  GraphKind kind = GraphKind::Standard;
  int genus = 0;              // genus of the parent graph
  std::vector<int> retained;  // sorted class indices

  bool contains_class(int cls) const;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Symbolic name attached to an edge: the image of `target` under the
// Jacobi map based at `basepoint`, as a label only.
struct ThetaLabel {
  Vertex basepoint;
  Vertex target;
  friend bool operator==(const ThetaLabel&, const ThetaLabel&) = default;
  friend std::strong_ordering operator<=>(const ThetaLabel&, const ThetaLabel&) = default;
};

// Standard graph (genus g >= 3): 2g+2 vertices {P, P_k, ~P, ~P_k}, the
// crown graph on g+1 class pairs. Weierstrass graph (genus g >= 2): the
// complete graph on the g+1 untilded vertices. Adjacency and ordered
// neighbor lists are derived, never stored; the object is an immutable
// value and all queries are safe to run concurrently.
class SpinGraph {
 public:
  static SpinGraph build(int genus, GraphKind kind);

  int genus() const { return genus_; }
  GraphKind kind() const { return kind_; }

  int vertex_count() const;
  int edge_count() const;

  bool has_vertex(const Vertex& v) const;
  void require_vertex(const Vertex& v) const;
  bool adjacent(const Vertex& u, const Vertex& v) const;

  std::vector<Vertex> vertices() const;                        // label order
  std::vector<std::pair<Vertex, Vertex>> edges() const;        // sorted pairs

  // The neighbors of v in the canonical induced order; position i (1-based)
  // is the meaning of index i in every permutation attached to v.
  std::vector<Vertex> neighbors_ordered(const Vertex& v) const;
  int neighbor_position(const Vertex& v, const Vertex& n) const;  // 1-based
  Vertex neighbor_at(const Vertex& v, int position) const;
  // The unique neighbor of v in class cls (cls != class of v).
  Vertex neighbor_in_class(const Vertex& v, int cls) const;

  friend bool operator==(const SpinGraph&, const SpinGraph&) = default;

 private:
  SpinGraph(int genus, GraphKind kind) : genus_(genus), kind_(kind) {}
  int genus_;
  GraphKind kind_;
};

SpinGraph build_graph(int genus, GraphKind kind);

// All faces, each exactly once, ordered by sorted class multiset and then
// by canonical traversal. Stable across runs.
std::vector<Face> enumerate_faces(const SpinGraph& g);
std::vector<Face> faces_at(const SpinGraph& g, const Vertex& v);
std::vector<Face> faces_with_edge(const SpinGraph& g, const Vertex& a, const Vertex& b);

// The unique 3-cell determined by a standard face (its four classes). For
// a Weierstrass triangle this returns the triangle's three classes; the
// four-class Weierstrass 3-cell comes from a face pair, below.
Cell cell_of_face(const SpinGraph& g, const Face& f);
Cell cell_of_face_pair(const SpinGraph& g, const Face& f1, const Face& f2);

struct CellExtraction {
  SpinGraph cell;                      // standard graph of genus |retained|-1
  std::map<Vertex, Vertex> vertex_map; // parent vertex -> cell vertex
};

// Induced subgraph on the retained classes, relabeled to a standard graph
// of genus n = |retained|-1. Class 0, when retained, stays the hub;
// otherwise the smallest retained class takes the hub role.
CellExtraction extract_cell(const SpinGraph& g, const std::vector<int>& retained);

// The edge <-> theta-label dictionary of a standard graph. Keys are edges
// normalized as (min, max) in label order.
std::map<std::pair<Vertex, Vertex>, ThetaLabel> theta_labels(const SpinGraph& g);

}  // namespace spingraph
