#include "spingraph/rotation.hpp"

#include <algorithm>
#include <stdexcept>

namespace spingraph {

CellLocalOrdering CellLocalOrdering::of(const SpinGraph& g, const Vertex& v, const Cell& c) {
  g.require_vertex(v);
  if (!c.contains_class(v.cls))
    throw std::invalid_argument("vertex " + to_label(v) + " is not in the cell");
  CellLocalOrdering out{v, c, {0, 0, 0}};
  int found = 0;
  for (int cls : c.retained) {
    if (cls == v.cls) continue;
    if (found == 3) throw std::invalid_argument("cell-local orderings need a 3-cell");
    out.slots[found++] = g.neighbor_position(v, g.neighbor_in_class(v, cls));
  }
  if (found != 3) throw std::invalid_argument("cell-local orderings need a 3-cell");
  std::sort(out.slots.begin(), out.slots.end());
  return out;
}

int CellLocalOrdering::rank_of_position(int position) const {
  for (int r = 0; r < 3; ++r)
    if (slots[r] == position) return r;
  throw std::invalid_argument("position is not a cell slot");
}

namespace {

void require_oriented_edge(const SpinGraph& g, const Face& f, const OrientedEdge& e) {
  if (!f.contains(e.from) || !f.contains(e.to))
    throw std::invalid_argument("edge " + to_label(e.from) + "->" + to_label(e.to) +
                                " is not on the face");
  if (!f.has_edge(e.from, e.to))
    throw std::invalid_argument("vertices " + to_label(e.from) + "," + to_label(e.to) +
                                " are opposite corners, not an edge");
  if (!g.adjacent(e.from, e.to))
    throw std::invalid_argument("edge endpoints are not adjacent in the graph");
}

}  // namespace

Permutation rotate(const SpinGraph& g, const Face& f, const OrientedEdge& e) {
  Face face = Face::of(g, f.cycle());  // validates the face against this graph
  require_oriented_edge(g, face, e);
  const int n = g.genus();
  const Cell cell = cell_of_face(g, face);
  std::vector<int> images(n, 0);

  // spectators: classes outside the cell map to the same class
  for (int cls = 0; cls <= n; ++cls) {
    if (cls == e.from.cls || cell.contains_class(cls)) continue;
    int src = g.neighbor_position(e.from, g.neighbor_in_class(e.from, cls));
    int dst = g.neighbor_position(e.to, g.neighbor_in_class(e.to, cls));
    images[src - 1] = dst;
  }

  if (g.kind() == GraphKind::Weierstrass) {
    // triangle {from, to, s}: the edge target rolls on to s, and s rolls
    // back to the edge source
    const Vertex s = face.cycle_neighbor(e.to, e.from);
    images[g.neighbor_position(e.from, e.to) - 1] =
        g.neighbor_position(e.to, s);
    images[g.neighbor_position(e.from, s) - 1] =
        g.neighbor_position(e.to, e.from);
    return Permutation(std::move(images));
  }

  // quadrangle ... prev, from, to, next ...: lift the genus-3 rule through
  // the cell-local slots of the two endpoints
  const Vertex prev = face.cycle_neighbor(e.from, e.to);
  const Vertex next = face.cycle_neighbor(e.to, e.from);
  const CellLocalOrdering from_slots = CellLocalOrdering::of(g, e.from, cell);
  const CellLocalOrdering to_slots = CellLocalOrdering::of(g, e.to, cell);

  int bar[3] = {-1, -1, -1};  // rank in from_slots -> rank in to_slots
  bar[from_slots.rank_of_position(g.neighbor_position(e.from, prev))] =
      to_slots.rank_of_position(g.neighbor_position(e.to, e.from));
  bar[from_slots.rank_of_position(g.neighbor_position(e.from, e.to))] =
      to_slots.rank_of_position(g.neighbor_position(e.to, next));
  // the remaining slot goes to the remaining slot
  int src_rest = 0 + 1 + 2, dst_rest = 0 + 1 + 2;
  for (int r = 0; r < 3; ++r)
    if (bar[r] >= 0) {
      src_rest -= r;
      dst_rest -= bar[r];
    }
  bar[src_rest] = dst_rest;

  for (int r = 0; r < 3; ++r) images[from_slots.slots[r] - 1] = to_slots.slots[bar[r]];
  return Permutation(std::move(images));
}

Permutation face_permutation(const SpinGraph& g, const Face& f, const Vertex& from,
                             const Vertex& to) {
  if (!f.contains(from) || !f.contains(to))
    throw std::invalid_argument("vertices are not on the face");
  if (from == to) return Permutation::identity(g.genus());
  if (f.has_edge(from, to)) return rotate(g, f, OrientedEdge{from, to});
  // opposite corners: either perimeter route gives the same composite
  const auto& cyc = f.cycle();
  Vertex mid = cyc[0];
  for (const auto& v : cyc)
    if (v != from && v != to && f.has_edge(from, v)) {
      mid = v;
      break;
    }
  return compose(rotate(g, f, OrientedEdge{mid, to}), rotate(g, f, OrientedEdge{from, mid}));
}

int orientation_weight(const SpinGraph& g, const Vertex& v) {
  if (g.kind() != GraphKind::Standard)
    throw std::invalid_argument("orientation weights are defined on standard graphs only");
  g.require_vertex(v);
  int base = (v.cls == 0 || v.cls % 2 == 1) ? +1 : -1;
  return v.conjugated ? -base : base;
}

Permutation perimeter_composition(const SpinGraph& g, const Face& f, const Vertex& start,
                                  Direction dir) {
  Face face = Face::of(g, f.cycle());
  if (!face.contains(start)) throw std::invalid_argument("start vertex is not on the face");
  std::vector<Vertex> order = face.cycle();
  if (dir == Direction::CounterClockwise) std::reverse(order.begin(), order.end());
  auto it = std::find(order.begin(), order.end(), start);
  std::rotate(order.begin(), it, order.end());

  Permutation acc = Permutation::identity(g.genus());
  const int n = face.size();
  for (int i = 0; i < n; ++i)
    acc = compose(rotate(g, face, OrientedEdge{order[i], order[(i + 1) % n]}), acc);
  return acc;
}

const Permutation& RotationTable::get(const Face& f, const Vertex& from, const Vertex& to) {
  auto pack = [](const Vertex& v) -> std::uint64_t {
    return static_cast<std::uint64_t>(v.cls) * 2 + (v.conjugated ? 1 : 0);
  };
  std::uint64_t key = 0;
  for (const auto& v : f.cycle()) key = key * 64 + pack(v);
  key = (key * 64 + pack(from)) * 64 + pack(to);
  auto it = memo_.find(key);
  if (it == memo_.end())
    it = memo_.emplace(key, rotate(graph_, f, OrientedEdge{from, to})).first;
  return it->second;
}

}  // namespace spingraph
