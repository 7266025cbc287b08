#pragma once

#include "alexsys/surface.hpp"

#include <string>
#include <vector>

namespace alexsys::cmap {

// Cellular embedding of a graph, encoded by darts. Edge k owns darts 2k and
// 2k+1; the edge involution is d ^ 1. `sigma` is the rotation (next dart
// counterclockwise around the common vertex). Faces are orbits of
// d -> sigma[d ^ 1]; punctures are marked faces and boundary circles are
// faces flagged as boundary.
class CombinatorialMap {
public:
  static constexpr int opp(int d) { return d ^ 1; }

  int dart_count() const { return static_cast<int>(sigma_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int sigma(int d) const { return sigma_[d]; }
  int face_next(int d) const { return sigma_[opp(d)]; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int face_of(int d) const { return face_of_[d]; }
  int pos_in_face(int d) const { return pos_in_face_[d]; }
  int vertex_of(int d) const { return vertex_of_[d]; }
  const std::vector<int>& face_walk(int f) const { return faces_[f]; }
  const std::vector<int>& vertex_rotation(int v) const { return vertices_[v]; }

  bool is_boundary_face(int f) const { return boundary_face_[f] != 0; }
  bool is_marked_face(int f) const { return marked_face_[f] != 0; }
  int boundary_face_total() const;
  int marked_face_total() const;

  // V - E + F over all faces; equals 2 - 2g of the closed-up surface.
  int euler_characteristic_closed() const;
  // V - E + F counting neither marked nor boundary faces: chi of the piece.
  int euler_characteristic_piece() const;

  const std::string& edge_name(int e) const { return edge_names_[e]; }
  int edge_by_name(const std::string& name) const; // -1 if absent
  std::string dart_name(int d) const;
  // Resolves "a0+", "e2-", ... to a dart id; throws InvalidPath on unknown.
  int dart_by_name(const std::string& name) const;

  // Construction -----------------------------------------------------------
  // Adds an isolated edge; rotations are wired afterwards.
  int add_edge(const std::string& name);
  // Declares one vertex with its full counterclockwise dart cycle.
  void set_vertex(const std::vector<int>& rotation);
  // Computes orbits and flags; `boundary_loops`/`puncture_loops` name the
  // loop edges whose monogon side is a boundary / marked face.
  void finalize(const std::vector<int>& boundary_loop_edges,
                const std::vector<int>& puncture_loop_edges);

  // Monogon face of a loop edge (the orbit of its odd dart must be a 1-walk).
  int monogon_face(int loop_edge) const;

private:
  std::vector<int> sigma_;
  std::vector<int> face_of_, pos_in_face_, vertex_of_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> vertices_;
  std::vector<char> boundary_face_, marked_face_;
  std::vector<std::string> edge_names_;
};

// Canonical base map of a finite-type piece. One scheme per signature:
// the n+b loop vertices sit on a cycle (edges e0..e_{S-1}) when n+b >= 2,
// otherwise everything attaches to a single vertex. Boundary circles are
// loops q_k, punctures loops p_j, handles loop pairs (a_i, b_i) interleaved
// at vertex 0.
struct PieceMap {
  CombinatorialMap map;
  surface::FiniteTypeSignature sig;
  std::vector<int> e_edges; // cycle edges, empty when n+b < 2
  std::vector<int> q_edges; // boundary loops, q_edges[k] = boundary k
  std::vector<int> p_edges; // puncture loops
  std::vector<int> a_edges, b_edges; // handle loops
};

PieceMap canonical_piece_map(const surface::FiniteTypeSignature& sig);

// Two pieces glued along one boundary circle each. Darts of A keep their ids;
// darts of B are translated. The interface survives as a single loop edge.
struct GluedChart {
  CombinatorialMap map;
  int interface_edge = -1;
  std::vector<int> a_darts; // old A dart -> glued dart
  std::vector<int> b_darts; // old B dart -> glued dart
};

GluedChart glue_boundary(const PieceMap& a, int boundary_index_a,
                         const PieceMap& b, int boundary_index_b);

} // namespace alexsys::cmap
