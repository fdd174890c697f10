#include "ge/lattice.hpp"

#include <algorithm>
#include <set>

namespace ge {

Lattice::Lattice(int vertex_count, std::vector<Edge> edges,
                 std::vector<std::vector<SignedEdge>> plaquettes,
                 std::string name, bool with_matter)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      plaquettes_(std::move(plaquettes)),
      name_(std::move(name)),
      with_matter_(with_matter) {
  if (vertex_count_ < 1) throw InvalidDims("lattice needs at least one vertex");
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 ||
        e.head >= vertex_count_)
      throw InvalidDims("edge endpoint out of range");
    if (e.tail == e.head) throw InvalidDims("self-loop edges are not allowed");
  }
  for (const auto& plaq : plaquettes_) {
    if (plaq.empty()) throw InvalidDims("empty plaquette");
    // The signed edge sequence must trace a closed walk.
    auto start_of = [&](const SignedEdge& se) {
      return se.sign > 0 ? edges_[se.edge].tail : edges_[se.edge].head;
    };
    auto end_of = [&](const SignedEdge& se) {
      return se.sign > 0 ? edges_[se.edge].head : edges_[se.edge].tail;
    };
    for (const SignedEdge& se : plaq)
      if (se.edge < 0 || se.edge >= edge_count() || (se.sign != 1 && se.sign != -1))
        throw InvalidDims("bad signed edge in plaquette");
    int cur = start_of(plaq.front());
    for (const SignedEdge& se : plaq) {
      if (start_of(se) != cur) throw InvalidDims("plaquette walk is not connected");
      cur = end_of(se);
    }
    if (cur != start_of(plaq.front()))
      throw InvalidDims("plaquette walk does not close");
  }
  outgoing_.resize(vertex_count_);
  incoming_.resize(vertex_count_);
  for (int e = 0; e < edge_count(); ++e) {
    outgoing_[edges_[e].tail].push_back(e);
    incoming_[edges_[e].head].push_back(e);
  }
}

Lattice Lattice::with_matter_sites() const {
  return Lattice(vertex_count_, edges_, plaquettes_, name_, true);
}

Lattice build_square_lattice(int rows, int cols, BoundaryKind boundary,
                             bool with_matter) {
  if (rows < 1 || cols < 1) throw InvalidDims("square lattice needs rows, cols >= 1");
  if (boundary == BoundaryKind::Torus && (rows < 2 || cols < 2))
    throw InvalidDims("torus needs rows, cols >= 2");
  const bool torus = boundary == BoundaryKind::Torus;
  auto vid = [cols](int r, int c) { return r * cols + c; };

  std::vector<Edge> edges;
  // Horizontal (rightward) edges first, row-major, then vertical (upward).
  std::vector<std::vector<int>> hidx(rows, std::vector<int>(cols, -1));
  std::vector<std::vector<int>> vidx(rows, std::vector<int>(cols, -1));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (torus || c + 1 < cols) {
        hidx[r][c] = static_cast<int>(edges.size());
        edges.push_back({vid(r, c), vid(r, (c + 1) % cols)});
      }
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (torus || r + 1 < rows) {
        vidx[r][c] = static_cast<int>(edges.size());
        edges.push_back({vid(r, c), vid((r + 1) % rows, c)});
      }

  // Counterclockwise walk from the lower-left corner of each cell:
  // right along the bottom, up the right side, back along the top, down the
  // left side. Edges traversed against their orientation get sign -1.
  std::vector<std::vector<SignedEdge>> plaquettes;
  int prow = torus ? rows : rows - 1;
  int pcol = torus ? cols : cols - 1;
  for (int r = 0; r < prow; ++r)
    for (int c = 0; c < pcol; ++c) {
      int r1 = (r + 1) % rows, c1 = (c + 1) % cols;
      plaquettes.push_back({{hidx[r][c], +1},
                            {vidx[r][c1], +1},
                            {hidx[r1][c], -1},
                            {vidx[r][c], -1}});
    }

  std::string name = "square" + std::to_string(rows) + "x" + std::to_string(cols) +
                     (torus ? ":torus" : ":open");
  return Lattice(rows * cols, std::move(edges), std::move(plaquettes), name,
                 with_matter);
}

Cut::Cut(const Lattice& lattice, std::vector<int> region_a)
    : lattice_(&lattice), region_a_(std::move(region_a)) {
  std::sort(region_a_.begin(), region_a_.end());
  region_a_.erase(std::unique(region_a_.begin(), region_a_.end()), region_a_.end());
  if (region_a_.empty()) throw EmptyRegion("region A has no vertices");
  for (int v : region_a_)
    if (v < 0 || v >= lattice.vertex_count())
      throw InvalidDims("region vertex out of range");
  if (static_cast<int>(region_a_.size()) == lattice.vertex_count())
    throw FullRegion("region A must be a proper subset of the vertices");

  in_a_.assign(lattice.vertex_count(), false);
  for (int v : region_a_) in_a_[v] = true;

  for (int e = 0; e < lattice.edge_count(); ++e) {
    bool ta = in_a_[lattice.edge(e).tail];
    bool ha = in_a_[lattice.edge(e).head];
    if (ta && ha)
      interior_a_.push_back(e);
    else if (!ta && !ha)
      interior_b_.push_back(e);
    else
      boundary_.push_back(e);
  }

  for (int e : boundary_) {
    const Edge& ed = lattice.edge(e);
    BoundarySlot s;
    s.edge = e;
    if (in_a_[ed.tail]) {
      s.a_vertex = ed.tail;
      s.b_vertex = ed.head;
      s.a_action = EdgeAction::Left;   // outgoing from A at the tail
      s.b_action = EdgeAction::Right;  // incoming into B at the head
    } else {
      s.a_vertex = ed.head;
      s.b_vertex = ed.tail;
      s.a_action = EdgeAction::Right;
      s.b_action = EdgeAction::Left;
    }
    slots_.push_back(s);
  }

  // A vertex straddles when its gauge transformation touches sites on both
  // sides; edge sites follow their tail, matter sites follow their vertex.
  for (int v = 0; v < lattice.vertex_count(); ++v) {
    bool touches_a = lattice.with_matter() && in_a_[v];
    bool touches_b = lattice.with_matter() && !in_a_[v];
    auto account = [&](int e) {
      if (in_a_[lattice.edge(e).tail])
        touches_a = true;
      else
        touches_b = true;
    };
    for (int e : lattice.outgoing(v)) account(e);
    for (int e : lattice.incoming(v)) account(e);
    if (touches_a && touches_b) straddling_.push_back(v);
  }
}

Cut Cut::complement() const {
  std::vector<int> region_b;
  for (int v = 0; v < lattice_->vertex_count(); ++v)
    if (!in_a_[v]) region_b.push_back(v);
  return Cut(*lattice_, region_b);
}

Cut make_cut(const Lattice& lattice, const std::vector<int>& region_a) {
  return Cut(lattice, region_a);
}

std::vector<BoundarySlot> edge_side_assignment(const Cut& cut) {
  return cut.slots();
}

std::vector<int> square_lattice_column(int rows, int cols, int k) {
  if (k < 0 || k >= cols) throw InvalidDims("column index out of range");
  std::vector<int> out;
  for (int r = 0; r < rows; ++r) out.push_back(r * cols + k);
  return out;
}

} // namespace ge
