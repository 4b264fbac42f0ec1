#include "spingraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace spingraph {

std::string to_string(GraphKind kind) {
  return kind == GraphKind::Standard ? "standard" : "weierstrass";
}

GraphKind parse_kind(std::string_view s) {
  if (s == "standard") return GraphKind::Standard;
  if (s == "weierstrass") return GraphKind::Weierstrass;
  throw std::invalid_argument("unknown graph kind '" + std::string(s) + "'");
}

namespace {

// Crown normal form: P_m and ~P sit on side A, ~P_m and P on side B;
// adjacency in a standard graph is "opposite sides, distinct classes".
bool on_side_a(const Vertex& v) { return v.conjugated == (v.cls == 0); }

std::string label_list(const std::vector<Vertex>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += ',';
    out += to_label(v);
  }
  return out;
}

}  // namespace

SpinGraph SpinGraph::build(int genus, GraphKind kind) {
  if (kind == GraphKind::Standard && genus < 3)
    throw std::invalid_argument("standard spin graphs require genus >= 3");
  if (kind == GraphKind::Weierstrass && genus < 2)
    throw std::invalid_argument("Weierstrass spin graphs require genus >= 2");
  return SpinGraph(genus, kind);
}

SpinGraph build_graph(int genus, GraphKind kind) { return SpinGraph::build(genus, kind); }

int SpinGraph::vertex_count() const {
  return kind_ == GraphKind::Standard ? 2 * genus_ + 2 : genus_ + 1;
}

int SpinGraph::edge_count() const {
  return kind_ == GraphKind::Standard ? genus_ * (genus_ + 1) : genus_ * (genus_ + 1) / 2;
}

bool SpinGraph::has_vertex(const Vertex& v) const {
  if (v.cls < 0 || v.cls > genus_) return false;
  if (kind_ == GraphKind::Weierstrass && v.conjugated) return false;
  return true;
}

void SpinGraph::require_vertex(const Vertex& v) const {
  if (!has_vertex(v))
    throw std::invalid_argument("vertex " + to_label(v) + " is not in this graph");
}

bool SpinGraph::adjacent(const Vertex& u, const Vertex& v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  if (kind_ == GraphKind::Weierstrass) return u != v;
  return on_side_a(u) != on_side_a(v) && u.cls != v.cls;
}

std::vector<Vertex> SpinGraph::vertices() const {
  std::vector<Vertex> out;
  for (int c = 0; c <= genus_; ++c) out.push_back(Vertex{c, false});
  if (kind_ == GraphKind::Standard)
    for (int c = 0; c <= genus_; ++c) out.push_back(Vertex{c, true});
  return out;
}

std::vector<std::pair<Vertex, Vertex>> SpinGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  auto vs = vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adjacent(vs[i], vs[j])) out.emplace_back(vs[i], vs[j]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> SpinGraph::neighbors_ordered(const Vertex& v) const {
  require_vertex(v);
  std::vector<Vertex> out;
  out.reserve(genus_);
  if (kind_ == GraphKind::Weierstrass) {
    if (v.cls == 0) {
      for (int c = 1; c <= genus_; ++c) out.push_back(Vertex{c, false});
    } else {
      // P takes the slot vacated by v's own class
      for (int c = 1; c <= genus_; ++c)
        out.push_back(c == v.cls ? Vertex{0, false} : Vertex{c, false});
    }
    return out;
  }
  if (v.cls == 0) {
    // hubs enumerate the same-flag leaves in class order
    for (int c = 1; c <= genus_; ++c) out.push_back(Vertex{c, v.conjugated});
  } else {
    // leaves put their hub first, then the opposite-flag leaves ascending
    out.push_back(Vertex{0, v.conjugated});
    for (int c = 1; c <= genus_; ++c)
      if (c != v.cls) out.push_back(Vertex{c, !v.conjugated});
  }
  return out;
}

int SpinGraph::neighbor_position(const Vertex& v, const Vertex& n) const {
  require_vertex(v);
  if (!adjacent(v, n))
    throw std::invalid_argument(to_label(n) + " is not a neighbor of " + to_label(v));
  if (kind_ == GraphKind::Weierstrass) {
    if (n.cls == 0) return v.cls;  // P occupies the vacated slot
    return n.cls;
  }
  if (v.cls == 0) return n.cls;
  if (n.cls == 0) return 1;
  return n.cls < v.cls ? n.cls + 1 : n.cls;
}

Vertex SpinGraph::neighbor_at(const Vertex& v, int position) const {
  require_vertex(v);
  if (position < 1 || position > genus_)
    throw std::invalid_argument("neighbor position out of range");
  if (kind_ == GraphKind::Weierstrass) {
    if (v.cls == 0) return Vertex{position, false};
    return position == v.cls ? Vertex{0, false} : Vertex{position, false};
  }
  if (v.cls == 0) return Vertex{position, v.conjugated};
  if (position == 1) return Vertex{0, v.conjugated};
  return Vertex{position <= v.cls ? position - 1 : position, !v.conjugated};
}

Vertex SpinGraph::neighbor_in_class(const Vertex& v, int cls) const {
  require_vertex(v);
  if (cls == v.cls || cls < 0 || cls > genus_)
    throw std::invalid_argument("no neighbor of " + to_label(v) + " in class " +
                                std::to_string(cls));
  if (kind_ == GraphKind::Weierstrass) return Vertex{cls, false};
  if (v.cls == 0) return Vertex{cls, v.conjugated};
  if (cls == 0) return Vertex{0, v.conjugated};
  return Vertex{cls, !v.conjugated};
}

bool Face::contains(const Vertex& v) const {
  return std::find(cycle_.begin(), cycle_.end(), v) != cycle_.end();
}

bool Face::has_edge(const Vertex& a, const Vertex& b) const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const Vertex& u = cycle_[i];
    const Vertex& w = cycle_[(i + 1) % n];
    if ((u == a && w == b) || (u == b && w == a)) return true;
  }
  return false;
}

Vertex Face::cycle_neighbor(const Vertex& v, const Vertex& exclude) const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (cycle_[i] != v) continue;
    Vertex a = cycle_[(i + 1) % n];
    Vertex b = cycle_[(i + n - 1) % n];
    if (a == exclude) return b;
    if (b == exclude) return a;
    throw std::invalid_argument(to_label(exclude) + " is not a perimeter neighbor of " +
                                to_label(v));
  }
  throw std::invalid_argument(to_label(v) + " is not on this face");
}

std::vector<int> Face::classes() const {
  std::vector<int> out;
  for (const auto& v : cycle_) out.push_back(v.cls);
  std::sort(out.begin(), out.end());
  return out;
}

Face Face::of(const SpinGraph& g, std::vector<Vertex> verts) {
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw std::invalid_argument("face has repeated vertices: " + label_list(verts));
  for (const auto& v : verts) g.require_vertex(v);

  Face f;
  if (g.kind() == GraphKind::Weierstrass) {
    if (verts.size() != 3)
      throw std::invalid_argument("Weierstrass faces are triangles: " + label_list(verts));
    f.cycle_ = std::move(verts);  // ascending order is the canonical traversal
    return f;
  }

  if (verts.size() != 4)
    throw std::invalid_argument("standard faces are quadrangles: " + label_list(verts));
  std::vector<Vertex> side_a, side_b;
  for (const auto& v : verts) (on_side_a(v) ? side_a : side_b).push_back(v);
  if (side_a.size() != 2 || side_b.size() != 2)
    throw std::invalid_argument("not a face (vertices do not form a quadrangle): " +
                                label_list(verts));
  auto cls = [&verts] {
    std::vector<int> c;
    for (const auto& v : verts) c.push_back(v.cls);
    std::sort(c.begin(), c.end());
    return c;
  }();
  if (std::adjacent_find(cls.begin(), cls.end()) != cls.end())
    throw std::invalid_argument("not a face (repeated class): " + label_list(verts));

  // same-side vertices are opposite corners; start at the least vertex and
  // move toward the lesser of its two perimeter neighbors
  Vertex start = verts.front();  // verts sorted
  std::vector<Vertex>& own = on_side_a(start) ? side_a : side_b;
  std::vector<Vertex>& other = on_side_a(start) ? side_b : side_a;
  Vertex opposite = own[0] == start ? own[1] : own[0];
  std::sort(other.begin(), other.end());
  f.cycle_ = {start, other[0], opposite, other[1]};
  return f;
}

namespace {

void require_face(const SpinGraph& g, const Face& f) {
  // reconstructing through Face::of re-validates against this graph
  Face check = Face::of(g, f.cycle());
  if (!(check == f)) throw std::invalid_argument("face does not belong to this graph");
}

}  // namespace

std::vector<Face> enumerate_faces(const SpinGraph& g) {
  std::vector<Face> out;
  if (g.kind() == GraphKind::Weierstrass) {
    const int n = g.genus();
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          out.push_back(Face::of(g, {Vertex{a, false}, Vertex{b, false}, Vertex{c, false}}));
  } else {
    std::vector<Vertex> side_a, side_b;
    for (const auto& v : g.vertices()) (on_side_a(v) ? side_a : side_b).push_back(v);
    for (std::size_t i = 0; i < side_a.size(); ++i)
      for (std::size_t j = i + 1; j < side_a.size(); ++j)
        for (std::size_t k = 0; k < side_b.size(); ++k)
          for (std::size_t l = k + 1; l < side_b.size(); ++l) {
            const Vertex &a1 = side_a[i], &a2 = side_a[j];
            const Vertex &b1 = side_b[k], &b2 = side_b[l];
            if (a1.cls == b1.cls || a1.cls == b2.cls || a2.cls == b1.cls || a2.cls == b2.cls)
              continue;
            out.push_back(Face::of(g, {a1, a2, b1, b2}));
          }
  }
  std::sort(out.begin(), out.end(), [](const Face& x, const Face& y) {
    auto cx = x.classes(), cy = y.classes();
    if (cx != cy) return cx < cy;
    return x.cycle() < y.cycle();
  });
  return out;
}

std::vector<Face> faces_at(const SpinGraph& g, const Vertex& v) {
  g.require_vertex(v);
  std::vector<Face> out;
  for (auto& f : enumerate_faces(g))
    if (f.contains(v)) out.push_back(std::move(f));
  return out;
}

std::vector<Face> faces_with_edge(const SpinGraph& g, const Vertex& a, const Vertex& b) {
  if (!g.adjacent(a, b))
    throw std::invalid_argument("no edge " + to_label(a) + "-" + to_label(b));
  std::vector<Face> out;
  for (auto& f : enumerate_faces(g))
    if (f.has_edge(a, b)) out.push_back(std::move(f));
  return out;
}

bool Cell::contains_class(int cls) const {
  return std::binary_search(retained.begin(), retained.end(), cls);
}

Cell cell_of_face(const SpinGraph& g, const Face& f) {
  require_face(g, f);
  return Cell{g.kind(), g.genus(), f.classes()};
}

Cell cell_of_face_pair(const SpinGraph& g, const Face& f1, const Face& f2) {
  if (g.kind() != GraphKind::Weierstrass)
    throw std::invalid_argument("face-pair cells are a Weierstrass construction");
  require_face(g, f1);
  require_face(g, f2);
  std::vector<int> shared;
  for (const auto& v : f1.cycle())
    if (f2.contains(v)) shared.push_back(v.cls);
  if (shared.size() != 2)
    throw std::invalid_argument("faces do not share an edge");
  std::vector<int> classes = f1.classes();
  for (int c : f2.classes())
    if (!std::count(classes.begin(), classes.end(), c)) classes.push_back(c);
  std::sort(classes.begin(), classes.end());
  return Cell{g.kind(), g.genus(), std::move(classes)};
}

CellExtraction extract_cell(const SpinGraph& g, const std::vector<int>& retained) {
  if (g.kind() != GraphKind::Standard)
    throw std::invalid_argument("cells are extracted from standard graphs");
  std::vector<int> classes = retained;
  std::sort(classes.begin(), classes.end());
  if (std::adjacent_find(classes.begin(), classes.end()) != classes.end())
    throw std::invalid_argument("retained classes must be distinct");
  for (int c : classes)
    if (c < 0 || c > g.genus())
      throw std::invalid_argument("retained class out of range: " + std::to_string(c));
  if (classes.size() < 4)
    throw std::invalid_argument("a cell retains at least 4 classes (n >= 3)");

  const int n = static_cast<int>(classes.size()) - 1;
  SpinGraph cell = SpinGraph::build(n, GraphKind::Standard);
  CellExtraction out{cell, {}};

  const bool hub_retained = classes.front() == 0;
  // new class of retained class classes[r] is r (ascending relabeling);
  // when class 0 is gone, classes[0] takes the hub role and sides flip so
  // that adjacency is preserved.
  for (std::size_t r = 0; r < classes.size(); ++r) {
    int old_cls = classes[r];
    int new_cls = static_cast<int>(r);
    for (bool conj : {false, true}) {
      Vertex from{old_cls, conj};
      Vertex to;
      if (hub_retained) {
        to = Vertex{new_cls, conj};
      } else if (new_cls == 0) {
        to = Vertex{0, conj};  // smallest retained class becomes the hub pair
      } else {
        to = Vertex{new_cls, !conj};  // leaves swap sides to keep adjacency
      }
      out.vertex_map.emplace(from, to);
    }
  }

  // the relabeling must be a graph isomorphism onto the genus-n graph
  for (const auto& [u, nu] : out.vertex_map)
    for (const auto& [w, nw] : out.vertex_map)
      if (g.adjacent(u, w) != cell.adjacent(nu, nw))
        throw std::logic_error("cell relabeling failed to preserve adjacency");
  return out;
}

std::map<std::pair<Vertex, Vertex>, ThetaLabel> theta_labels(const SpinGraph& g) {
  if (g.kind() != GraphKind::Standard)
    throw std::invalid_argument("theta labels are defined on standard graphs");
  std::map<std::pair<Vertex, Vertex>, ThetaLabel> out;
  for (const auto& [u, v] : g.edges()) {
    ThetaLabel label;
    if (u.cls == 0 || v.cls == 0) {
      // hub edges: the hub is the basepoint
      const Vertex& hub = u.cls == 0 ? u : v;
      const Vertex& leaf = u.cls == 0 ? v : u;
      label = ThetaLabel{hub, leaf};
    } else {
      // edge P_i ~P_k: basepoint P_i when i < k, else basepoint ~P_k
      const Vertex& plain = u.conjugated ? v : u;
      const Vertex& tilde = u.conjugated ? u : v;
      label = plain.cls < tilde.cls ? ThetaLabel{plain, tilde} : ThetaLabel{tilde, plain};
    }
    out.emplace(std::make_pair(u, v), label);
  }
  return out;
}

}  // namespace spingraph
