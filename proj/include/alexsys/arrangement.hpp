#pragma once

#include "alexsys/combinatorial_map.hpp"
#include "alexsys/order_key.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace alexsys::arr {

enum class PathKind { Closed, Arc };

// One transverse crossing of a base edge. `dart` selects the face being
// entered; `key` orders the crossing point along the edge (canonical
// direction = from the even dart's tail).
struct PathStep {
  int dart = -1;
  OrderKey key;

  bool operator==(const PathStep& o) const { return dart == o.dart && key == o.key; }
};

// A simple closed curve or properly embedded arc, recorded by its cyclic
// (resp. linear) edge-crossing sequence. Arcs start and end on boundary
// circles: the first step leaves a boundary face, the last one enters one.
struct CurvePath {
  std::string id;
  PathKind kind = PathKind::Closed;
  std::vector<PathStep> steps;

  int step_count() const { return static_cast<int>(steps.size()); }
  bool closed() const { return kind == PathKind::Closed; }
  // Chords: segment c runs from step c to step c+1 (cyclically for curves).
  int chord_count() const {
    return closed() ? step_count() : std::max(0, step_count() - 1);
  }
};

// Removes empty back-and-forth detours (consecutive steps d, opp(d) whose
// two points are adjacent on the edge among this path's own points). Pure
// isotopy; keeps surgery outputs small.
CurvePath tauten(const CurvePath& path);

struct OverlayOptions {
  // Pair computations tolerate equal keys (broken by member order, then step);
  // full arrangements treat a tie as a non-transverse contact.
  bool allow_key_ties = false;
};

struct Crossing {
  int member_a, chord_a; // segment index along a where the crossing sits
  int member_b, chord_b;
  int base_face;
  int rvertex; // refined vertex id
};

struct Region {
  int id = 0;
  int euler_char = 0; // chi of the underlying compact subsurface
  int puncture_count = 0;
  bool touches_boundary = false;
  std::vector<int> adjacent_circles; // q-edge ids of hugged boundary circles
  std::vector<int> faces;            // refined face ids
  std::vector<std::vector<int>> walks; // boundary walks as wall rdart lists

  enum class Class { OpenDisk, OncePuncturedDisk, Other };
  Class classification = Class::Other;
  bool collar = false; // annulus hugging exactly one boundary circle
};

// Transverse overlay of member paths on a base map, refined to a
// combinatorial map whose degree-4 vertices are the crossings.
class Arrangement {
public:
  Arrangement(cmap::CombinatorialMap base, std::vector<CurvePath> members,
              OverlayOptions options = {});

  const cmap::CombinatorialMap& base() const { return base_; }
  const std::vector<CurvePath>& members() const { return members_; }
  const CurvePath& member(int i) const { return members_[i]; }
  int member_count() const { return static_cast<int>(members_.size()); }
  int member_index(const std::string& id) const; // -1 if absent

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count(int a, int b) const { return placed_[a][b]; }
  int total_crossings() const { return static_cast<int>(crossings_.size()); }

  // Refined map access (owner annotations are internal; regions expose what
  // verification needs).
  int rdart_count() const { return static_cast<int>(rsigma_.size()); }
  int rface_count() const { return static_cast<int>(rfaces_.size()); }
  int euler_characteristic_closed() const;
  bool regions_valid() const { return regions_valid_; }

  const std::vector<Region>& regions() const;

  // Wall rdart description for witnesses: member/chord (member >= 0) or the
  // q-edge id for a boundary circle segment.
  struct WallOwner {
    int member = -1;
    int chord = -1;
    int circle_edge = -1;
  };
  WallOwner wall_owner(int rdart) const;

  // Vertex at the head of a walk rdart (the junction a region boundary walk
  // turns or passes through), and whether it is a member-member crossing.
  int head_vertex(int rdart) const { return rvertex_of_rdart_[rdart ^ 1]; }
  bool vertex_is_crossing(int rvertex) const {
    return rvertex >= cross_vertex_offset_;
  }

  // Internal structure shared with the surgery routines.
  struct EdgePoint {
    int member, step;
    OrderKey key;
  };
  const std::vector<std::vector<EdgePoint>>& edge_points() const { return edge_points_; }

  struct ChordRef {
    int member = -1, chord = -1;
  };

  // Region containing a given refined face (regions are computed lazily).
  int region_of_rface(int rface) const;

  // Sorted crossing list along each chord, as (position, other chord) pairs.
  struct ChordHit {
    int crossing; // index into crossings()
  };
  const std::vector<ChordHit>& chord_hits(int member, int chord) const;

  // Neighbouring key strictly on the chosen side of point (edge, index):
  // used when sliding a strand off a bigon or laying parallel copies.
  OrderKey key_beside(int edge, int point_index, bool increasing) const;

  // True when the side of growing keys at this member point borders the
  // given region. Throws unless the rdarts around the point are resolved.
  bool increasing_side_in_region(int edge, int point_index, int region) const;

private:
  friend struct OverlayBuilder;

  cmap::CombinatorialMap base_;
  std::vector<CurvePath> members_;
  OverlayOptions options_;

  std::vector<std::vector<EdgePoint>> edge_points_; // per base edge, sorted
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> placed_; // member x member placed counts

  // Refined map.
  std::vector<int> rsigma_;
  std::vector<std::vector<int>> rfaces_;
  std::vector<int> rface_of_;
  int rvertex_count_ = 0;
  std::vector<char> redge_wall_;        // per refined edge
  std::vector<int> redge_circle_;       // q-edge id when boundary segment
  std::vector<ChordRef> redge_chord_;   // member chord when chord segment
  std::vector<int> redge_base_edge_;    // base edge when edge segment
  std::vector<int> rface_base_face_;    // enclosing base face
  std::vector<char> rface_is_cap_;      // inside a boundary monogon
  std::vector<char> rface_marked_;      // inside a marked face
  std::vector<int> rvertex_of_rdart_;   // tail vertex of each rdart
  std::vector<std::vector<ChordHit>> hits_; // flattened per member chord
  std::vector<int> hits_offset_;            // member -> first chord slot
  std::vector<int> eseg_offset_;            // base edge -> first edge-seg redge
  std::vector<int> cseg_offset_;            // global chord -> first chord-seg redge
  int cross_vertex_offset_ = 0;
  bool regions_valid_ = true;

  mutable std::vector<Region> regions_;
  mutable std::vector<int> region_of_rface_;
  mutable bool regions_computed_ = false;

  void compute_regions() const;
};

// Spec operation [OP] overlay.
Arrangement overlay(cmap::CombinatorialMap base, std::vector<CurvePath> members,
                    OverlayOptions options = {});

// One innermost empty bigon between two members. Chord intervals are given in
// each member's own forward order, together with the orientation the region
// walk traverses that member with.
struct Bigon {
  int region = -1;
  int member_a = -1, member_b = -1;
  int a_lo = 0, a_hi = 0;
  bool a_walk_forward = true;
  int b_lo = 0, b_hi = 0;
  bool b_walk_forward = true;
};

std::vector<Bigon> all_bigons(const Arrangement& arr, int a, int b);
std::optional<Bigon> find_bigon(const Arrangement& pair_arr, int a, int b);

// Repeated innermost bigon removal between two paths on a base map; returns
// the reduced pair arrangement and the number of crossings removed.
struct ReduceResult {
  Arrangement arrangement;
  int removed = 0;
};
ReduceResult reduce_bigons(const cmap::CombinatorialMap& base, const CurvePath& a,
                           const CurvePath& b);
ReduceResult reduce_bigons(const Arrangement& arr, const std::string& a,
                           const std::string& b);

// Geometric intersection number: crossings left after bigon reduction.
int intersection_number(const cmap::CombinatorialMap& base, const CurvePath& a,
                        const CurvePath& b);
int intersection_number(const Arrangement& arr, const std::string& a,
                        const std::string& b);

// Order-exploring reduction oracle: removes bigons in every possible order
// (depth-first over choices) and reports the set of terminal crossing counts.
std::vector<int> reduction_terminal_counts_oracle(const cmap::CombinatorialMap& base,
                                                  const CurvePath& a,
                                                  const CurvePath& b,
                                                  int max_states = 4096);

struct PairWitness {
  int member_a = -1, member_b = -1;
  int region = -1; // offending bigon region id
};

struct AlexanderReport {
  bool minimal_position_ok = true;
  std::vector<PairWitness> bigon_pairs;
  std::vector<std::pair<int, int>> indeterminate_pairs;
  bool triples_ok = true;
  std::vector<std::array<int, 3>> bad_triples;
  std::vector<std::vector<int>> intersection_matrix; // reduced values
  bool accepted() const {
    return minimal_position_ok && triples_ok && indeterminate_pairs.empty();
  }
};

AlexanderReport check_alexander_system(const Arrangement& arr);

struct FillingReport {
  bool filling = true;
  std::optional<Region> witness;
  int disks = 0, punctured_disks = 0, collars = 0;
};

FillingReport is_filling(const Arrangement& arr);

} // namespace alexsys::arr
