#pragma once

#include <string>
#include <vector>

#include "ge/errors.hpp"

namespace ge {

struct Edge {
  int tail = 0;
  int head = 0;
};

struct SignedEdge {
  int edge = 0;
  int sign = +1;  // +1: traversed tail->head, -1: head->tail
};

/// Directed lattice: vertices 0..vertex_count-1, oriented edges, and
/// plaquettes given as closed signed walks. Immutable after construction.
class Lattice {
public:
  Lattice(int vertex_count, std::vector<Edge> edges,
          std::vector<std::vector<SignedEdge>> plaquettes, std::string name,
          bool with_matter = false);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<std::vector<SignedEdge>>& plaquettes() const {
    return plaquettes_;
  }
  const std::string& name() const { return name_; }
  bool with_matter() const { return with_matter_; }

  /// Edges incident to v (outgoing and incoming).
  const std::vector<int>& outgoing(int v) const { return outgoing_[v]; }
  const std::vector<int>& incoming(int v) const { return incoming_[v]; }

  Lattice with_matter_sites() const;

private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<SignedEdge>> plaquettes_;
  std::string name_;
  bool with_matter_;
  std::vector<std::vector<int>> outgoing_, incoming_;
};

enum class BoundaryKind { Open, Torus };

/// Square lattice with edges oriented rightward (increasing column) and
/// upward (increasing row), vertex id = row*cols + col. Plaquettes are
/// counterclockwise closed walks starting at the lower-left corner.
/// Open lattices need rows, cols >= 1; the torus needs rows, cols >= 2
/// (a 1-wide torus would create self-loop edges).
Lattice build_square_lattice(int rows, int cols, BoundaryKind boundary,
                             bool with_matter = false);

/// Which of the two single-edge gauge rotations acts on a boundary edge from
/// the given region: Left is the rotation at the tail (the edge is outgoing
/// there), Right the rotation at the head.
enum class EdgeAction { Left, Right };

/// One superselection slot per boundary edge: the vertex whose gauge
/// transformation rotates the edge from inside region A, and the L/R form it
/// takes there (mirror data for B).
struct BoundarySlot {
  int edge = 0;
  int a_vertex = 0;           // endpoint inside A
  int b_vertex = 0;           // endpoint inside B
  EdgeAction a_action = EdgeAction::Left;
  EdgeAction b_action = EdgeAction::Right;
};

/// A bipartite cut of a lattice. Edges with both endpoints in A (resp. B) are
/// interior; the rest are boundary edges, one sector slot each. For the
/// A|B tensor factorization each boundary edge site is grouped with its tail
/// vertex's region.
class Cut {
public:
  Cut(const Lattice& lattice, std::vector<int> region_a);

  const Lattice& lattice() const { return *lattice_; }
  const std::vector<int>& region_a() const { return region_a_; }
  bool in_a(int v) const { return in_a_[v]; }

  const std::vector<int>& interior_a_edges() const { return interior_a_; }
  const std::vector<int>& interior_b_edges() const { return interior_b_; }
  const std::vector<int>& boundary_edges() const { return boundary_; }
  int n_boundary() const { return static_cast<int>(boundary_.size()); }

  const std::vector<BoundarySlot>& slots() const { return slots_; }

  /// Vertices whose gauge transformation has support on sites of both
  /// regions (with boundary-edge sites grouped by tail).
  const std::vector<int>& straddling_vertices() const { return straddling_; }

  /// True if the boundary edge site belongs to region A under the tail rule.
  bool boundary_edge_in_a(int e) const { return in_a_[lattice_->edge(e).tail]; }

  /// Swap the roles of A and B.
  Cut complement() const;

private:
  const Lattice* lattice_;
  std::vector<int> region_a_;
  std::vector<bool> in_a_;
  std::vector<int> interior_a_, interior_b_, boundary_;
  std::vector<BoundarySlot> slots_;
  std::vector<int> straddling_;
};

Cut make_cut(const Lattice& lattice, const std::vector<int>& region_a);

/// Per-boundary-edge record of the L/R actions seen from each side.
std::vector<BoundarySlot> edge_side_assignment(const Cut& cut);

/// Vertex ids of column k (helper for "cut = column:<k>" specs); requires the
/// lattice to have been built by build_square_lattice.
std::vector<int> square_lattice_column(int rows, int cols, int k);

} // namespace ge
