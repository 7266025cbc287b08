#include "alexsys/arrangement.hpp"

#include "alexsys/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace alexsys::arr {

using cmap::CombinatorialMap;

CurvePath tauten(const CurvePath& path) {
  CurvePath cur = path;
  bool changed = true;
  while (changed && cur.step_count() >= 2) {
    changed = false;
    const int m = cur.step_count();
    const int last_pair = cur.closed() ? m : m - 1;
    for (int i = 0; i < last_pair; ++i) {
      int j = (i + 1) % m;
      const PathStep& s = cur.steps[i];
      const PathStep& t = cur.steps[j];
      if (s.dart != CombinatorialMap::opp(t.dart)) continue;
      // Removable only when no other point of this path sits between the two
      // detour points on the edge.
      bool blocked = false;
      for (int k = 0; k < m && !blocked; ++k) {
        if (k == i || k == j) continue;
        if (cur.steps[k].dart / 2 != s.dart / 2) continue;
        const OrderKey& lo = std::min(s.key, t.key);
        const OrderKey& hi = std::max(s.key, t.key);
        if (lo < cur.steps[k].key && cur.steps[k].key < hi) blocked = true;
      }
      if (blocked) continue;
      std::vector<PathStep> next;
      for (int k = 0; k < m; ++k)
        if (k != i && k != j) next.push_back(cur.steps[k]);
      cur.steps = std::move(next);
      changed = true;
      break;
    }
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Overlay construction
// ---------------------------------------------------------------------------

namespace {

struct ChordData {
  int member = -1, index = -1; // chord `index` runs step index -> index+1
  int face = -1;
  int start_item = -1, end_item = -1;
};

} // namespace

struct OverlayBuilder {
  Arrangement& A;
  const CombinatorialMap& M;

  std::vector<std::vector<int>> step_point; // member/step -> index in edge points
  std::vector<std::vector<int>> item_base;  // face -> corner item index per side
  std::vector<int> items_total;
  std::vector<ChordData> chords;
  std::vector<int> chord_offset; // member -> first global chord id
  std::vector<std::vector<int>> face_chords;

  explicit OverlayBuilder(Arrangement& a) : A(a), M(a.base_) {}

  int chord_id(int member, int index) const { return chord_offset[member] + index; }

  void run() {
    validate_paths();
    collect_points();
    build_items();
    build_chords();
    find_crossings();
    // With an in-face mutually-crossing chord triple the crossing order along
    // a chord is not determined; the pairwise data above stays valid but no
    // faithful refinement exists, so region-dependent analysis is disabled.
    if (A.regions_valid_) build_refined();
  }

  void validate_paths() {
    std::set<std::string> ids;
    for (const auto& p : A.members_) {
      if (!ids.insert(p.id).second) throw InvalidPath("duplicate member id: " + p.id);
      if (p.steps.empty()) throw InvalidPath(p.id + ": empty crossing sequence");
      if (!p.closed() && p.step_count() < 2)
        throw InvalidPath(p.id + ": arc needs at least two steps");
      const int m = p.step_count();
      for (int s = 0; s < m; ++s) {
        int d = p.steps[s].dart;
        if (d < 0 || d >= M.dart_count()) throw InvalidPath(p.id + ": bad dart id");
        bool first = (s == 0), last = (s == m - 1);
        int face_in = M.face_of(d);
        int face_from = M.face_of(CombinatorialMap::opp(d));
        if (p.closed() || !last) {
          if (M.is_boundary_face(face_in) || M.is_marked_face(face_in))
            throw InvalidPath(p.id + ": path runs into a boundary or marked face");
        } else if (!M.is_boundary_face(face_in)) {
          throw InvalidPath(p.id + ": arc must end on a boundary face");
        }
        if (p.closed() || !first) {
          if (M.is_boundary_face(face_from) || M.is_marked_face(face_from))
            throw InvalidPath(p.id + ": path leaves a boundary or marked face");
        } else if (!M.is_boundary_face(face_from)) {
          throw InvalidPath(p.id + ": arc must start on a boundary face");
        }
      }
      for (int c = 0; c < p.chord_count(); ++c) {
        int s = c, t = (c + 1) % m;
        if (M.face_of(p.steps[s].dart) !=
            M.face_of(CombinatorialMap::opp(p.steps[t].dart)))
          throw InvalidPath(p.id + ": steps " + std::to_string(s) + "," +
                            std::to_string(t) + " do not share a face");
      }
    }
  }

  void collect_points() {
    A.edge_points_.assign(M.edge_count(), {});
    for (int m = 0; m < A.member_count(); ++m) {
      const auto& p = A.members_[m];
      for (int s = 0; s < p.step_count(); ++s)
        A.edge_points_[p.steps[s].dart / 2].push_back({m, s, p.steps[s].key});
    }
    for (int e = 0; e < M.edge_count(); ++e) {
      auto& pts = A.edge_points_[e];
      std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
        if (x.key != y.key) return x.key < y.key;
        if (x.member != y.member) return x.member < y.member;
        return x.step < y.step;
      });
      for (size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i].key != pts[i + 1].key) continue;
        if (pts[i].member == pts[i + 1].member)
          throw NonEmbeddedPath(A.members_[pts[i].member].id +
                                ": repeated point on edge " + M.edge_name(e));
        if (!A.options_.allow_key_ties) {
          if (A.members_[pts[i].member].steps == A.members_[pts[i + 1].member].steps)
            throw NonEmbeddedPath("coincident copies of one crossing sequence on edge " +
                                  M.edge_name(e));
          throw TriplePoint("two members share a point on edge " + M.edge_name(e));
        }
      }
    }
    step_point.assign(A.member_count(), {});
    for (int m = 0; m < A.member_count(); ++m)
      step_point[m].assign(A.members_[m].step_count(), -1);
    for (int e = 0; e < M.edge_count(); ++e)
      for (size_t i = 0; i < A.edge_points_[e].size(); ++i) {
        const auto& pt = A.edge_points_[e][i];
        step_point[pt.member][pt.step] = static_cast<int>(i);
      }
  }

  void build_items() {
    item_base.assign(M.face_count(), {});
    items_total.assign(M.face_count(), 0);
    for (int f = 0; f < M.face_count(); ++f) {
      const auto& walk = M.face_walk(f);
      item_base[f].resize(walk.size());
      int acc = 0;
      for (size_t j = 0; j < walk.size(); ++j) {
        item_base[f][j] = acc;
        acc += 1 + static_cast<int>(A.edge_points_[walk[j] / 2].size());
      }
      items_total[f] = acc;
    }
  }

  // Lift of the point of (member, step) onto the side of dart `side`. Walk
  // direction along a side follows increasing keys on the even dart and
  // decreasing keys on the odd one.
  int lift_item(int member, int step, int side) const {
    int e = side / 2;
    int f = M.face_of(side);
    int j = M.pos_in_face(side);
    int i = step_point[member][step];
    int k = static_cast<int>(A.edge_points_[e].size());
    int rank = (side & 1) ? (k - i) : (i + 1);
    return item_base[f][j] + rank;
  }

  void build_chords() {
    chord_offset.assign(A.member_count() + 1, 0);
    for (int m = 0; m < A.member_count(); ++m)
      chord_offset[m + 1] = chord_offset[m] + A.members_[m].chord_count();
    chords.resize(chord_offset[A.member_count()]);
    face_chords.assign(M.face_count(), {});
    for (int m = 0; m < A.member_count(); ++m) {
      const auto& p = A.members_[m];
      for (int c = 0; c < p.chord_count(); ++c) {
        int s = c, t = (c + 1) % p.step_count();
        ChordData cd;
        cd.member = m;
        cd.index = c;
        cd.face = M.face_of(p.steps[s].dart);
        cd.start_item = lift_item(m, s, p.steps[s].dart);
        cd.end_item = lift_item(m, t, CombinatorialMap::opp(p.steps[t].dart));
        chords[chord_id(m, c)] = cd;
        face_chords[cd.face].push_back(chord_id(m, c));
      }
    }
  }

  static bool in_open_arc(int total, int a, int b, int q) {
    int len = (b - a + total) % total;
    int off = (q - a + total) % total;
    return off > 0 && off < len;
  }

  static bool interleaves(int total, int x1, int x2, int y1, int y2) {
    return in_open_arc(total, x1, x2, y1) != in_open_arc(total, x1, x2, y2);
  }

  void find_crossings() {
    A.placed_.assign(A.member_count(), std::vector<int>(A.member_count(), 0));
    A.hits_offset_ = chord_offset;
    A.hits_.assign(chords.size(), {});
    std::vector<std::vector<int>> partners(chords.size());

    for (int f = 0; f < M.face_count(); ++f) {
      const auto& list = face_chords[f];
      for (size_t x = 0; x < list.size(); ++x) {
        for (size_t y = x + 1; y < list.size(); ++y) {
          const ChordData& X = chords[list[x]];
          const ChordData& Y = chords[list[y]];
          if (!interleaves(items_total[f], X.start_item, X.end_item, Y.start_item,
                           Y.end_item))
            continue;
          if (X.member == Y.member)
            throw NonEmbeddedPath(A.members_[X.member].id + ": self-crossing chords " +
                                  std::to_string(X.index) + "," +
                                  std::to_string(Y.index));
          partners[list[x]].push_back(list[y]);
          partners[list[y]].push_back(list[x]);
        }
      }
    }

    // Order crossings along each chord. When no two partners of a chord cross
    // each other inside the face (guaranteed if no three members pairwise
    // intersect there), sorting by the partner endpoint on the near side is
    // exact; otherwise the order is a deterministic best effort and region
    // analysis is disabled.
    for (size_t c = 0; c < chords.size(); ++c) {
      const ChordData& X = chords[c];
      auto& ps = partners[c];
      int total = items_total[X.face];
      auto arc1_rank = [&](int partner) {
        const ChordData& Y = chords[partner];
        int o1 = (Y.start_item - X.start_item + total) % total;
        int o2 = (Y.end_item - X.start_item + total) % total;
        return in_open_arc(total, X.start_item, X.end_item, Y.start_item) ? o1 : o2;
      };
      std::sort(ps.begin(), ps.end(),
                [&](int p, int q) { return arc1_rank(p) < arc1_rank(q); });
      for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j)
          if (interleaves(total, chords[ps[i]].start_item, chords[ps[i]].end_item,
                          chords[ps[j]].start_item, chords[ps[j]].end_item))
            A.regions_valid_ = false;
    }

    std::map<std::pair<int, int>, int> seen;
    for (size_t c = 0; c < chords.size(); ++c) {
      const ChordData& X = chords[c];
      for (int partner : partners[c]) {
        int lo_id = std::min<int>(static_cast<int>(c), partner);
        int hi_id = std::max<int>(static_cast<int>(c), partner);
        auto it = seen.find({lo_id, hi_id});
        int cross_id;
        if (it == seen.end()) {
          const ChordData& Y = chords[partner];
          Crossing cr;
          const ChordData* lo = X.member < Y.member ? &X : &Y;
          const ChordData* hi = X.member < Y.member ? &Y : &X;
          cr.member_a = lo->member;
          cr.chord_a = lo->index;
          cr.member_b = hi->member;
          cr.chord_b = hi->index;
          cr.base_face = X.face;
          cr.rvertex = -1;
          cross_id = static_cast<int>(A.crossings_.size());
          A.crossings_.push_back(cr);
          seen[{lo_id, hi_id}] = cross_id;
          A.placed_[X.member][Y.member]++;
          A.placed_[Y.member][X.member]++;
        } else {
          cross_id = it->second;
        }
        A.hits_[c].push_back({cross_id});
      }
    }
  }

  // -------------------------------------------------------------------------
  // Refined map
  // -------------------------------------------------------------------------

  int ep_vertex_offset = 0, cross_vertex_offset = 0;
  std::vector<int> ep_offset; // base edge -> first edge-point vertex

  int edge_point_vertex(int e, int i) const { return ep_offset[e] + i; }

  void build_refined() {
    ep_vertex_offset = M.vertex_count();
    ep_offset.assign(M.edge_count() + 1, 0);
    for (int e = 0; e < M.edge_count(); ++e)
      ep_offset[e + 1] = ep_offset[e] + static_cast<int>(A.edge_points_[e].size());
    for (int e = 0; e <= M.edge_count(); ++e) ep_offset[e] += ep_vertex_offset;
    cross_vertex_offset = ep_offset[M.edge_count()];
    A.cross_vertex_offset_ = cross_vertex_offset;
    A.rvertex_count_ = cross_vertex_offset + static_cast<int>(A.crossings_.size());
    for (size_t i = 0; i < A.crossings_.size(); ++i)
      A.crossings_[i].rvertex = cross_vertex_offset + static_cast<int>(i);

    A.eseg_offset_.assign(M.edge_count() + 1, 0);
    for (int e = 0; e < M.edge_count(); ++e)
      A.eseg_offset_[e + 1] =
          A.eseg_offset_[e] + static_cast<int>(A.edge_points_[e].size()) + 1;
    const int n_esegs = A.eseg_offset_[M.edge_count()];
    A.cseg_offset_.assign(chords.size() + 1, n_esegs);
    for (size_t c = 0; c < chords.size(); ++c)
      A.cseg_offset_[c + 1] =
          A.cseg_offset_[c] + static_cast<int>(A.hits_[c].size()) + 1;
    const int n_redges = A.cseg_offset_[chords.size()];

    A.redge_wall_.assign(n_redges, 0);
    A.redge_circle_.assign(n_redges, -1);
    A.redge_chord_.assign(n_redges, {});
    A.redge_base_edge_.assign(n_redges, -1);
    for (int e = 0; e < M.edge_count(); ++e) {
      bool wall = M.is_boundary_face(M.face_of(2 * e)) ||
                  M.is_boundary_face(M.face_of(2 * e + 1));
      for (int i = A.eseg_offset_[e]; i < A.eseg_offset_[e + 1]; ++i) {
        A.redge_base_edge_[i] = e;
        if (wall) {
          A.redge_wall_[i] = 1;
          A.redge_circle_[i] = e;
        }
      }
    }
    for (size_t c = 0; c < chords.size(); ++c)
      for (int i = A.cseg_offset_[c]; i < A.cseg_offset_[c + 1]; ++i) {
        A.redge_wall_[i] = 1;
        A.redge_chord_[i] = {chords[c].member, chords[c].index};
      }

    auto eseg_up = [&](int e, int i) { return 2 * (A.eseg_offset_[e] + i + 1); };
    auto eseg_dn = [&](int e, int i) { return 2 * (A.eseg_offset_[e] + i) + 1; };
    auto cseg_fwd = [&](int c, int j) { return 2 * (A.cseg_offset_[c] + j); };
    auto cseg_bwd = [&](int c, int j) { return 2 * (A.cseg_offset_[c] + j) + 1; };

    std::vector<std::vector<int>> rotations(A.rvertex_count_);
    for (int v = 0; v < M.vertex_count(); ++v) {
      std::vector<int> rot;
      for (int d : M.vertex_rotation(v)) {
        int e = d / 2;
        int k = static_cast<int>(A.edge_points_[e].size());
        rot.push_back((d & 1) ? eseg_dn(e, k) : eseg_up(e, -1));
      }
      rotations[v] = std::move(rot);
    }
    for (int e = 0; e < M.edge_count(); ++e) {
      for (size_t i = 0; i < A.edge_points_[e].size(); ++i) {
        const auto& pt = A.edge_points_[e][i];
        const CurvePath& p = A.members_[pt.member];
        const int m = p.step_count();
        int d = p.steps[pt.step].dart;
        int out_chord = -1, in_chord = -1;
        if (p.closed() || pt.step < m - 1) out_chord = chord_id(pt.member, pt.step);
        if (p.closed() || pt.step > 0)
          in_chord = chord_id(pt.member, (pt.step - 1 + m) % m);
        int out_ray = out_chord < 0 ? -1 : cseg_fwd(out_chord, 0);
        int in_ray =
            in_chord < 0
                ? -1
                : cseg_bwd(in_chord, static_cast<int>(A.hits_[in_chord].size()));
        // Face walks carry their face on the right, so rotating counter-
        // clockwise from the key-increasing ray first sweeps the odd-dart
        // face side: [up, chord on odd side, down, chord on even side].
        int even_side_ray = (d & 1) ? in_ray : out_ray;
        int odd_side_ray = (d & 1) ? out_ray : in_ray;
        std::vector<int> rot;
        rot.push_back(eseg_up(e, static_cast<int>(i)));
        if (odd_side_ray >= 0) rot.push_back(odd_side_ray);
        rot.push_back(eseg_dn(e, static_cast<int>(i)));
        if (even_side_ray >= 0) rot.push_back(even_side_ray);
        rotations[edge_point_vertex(e, static_cast<int>(i))] = std::move(rot);
      }
    }
    for (size_t x = 0; x < A.crossings_.size(); ++x) {
      const Crossing& cr = A.crossings_[x];
      int ca = chord_id(cr.member_a, cr.chord_a);
      int cb = chord_id(cr.member_b, cr.chord_b);
      auto pos_in = [&](int c) {
        const auto& h = A.hits_[c];
        for (size_t j = 0; j < h.size(); ++j)
          if (h[j].crossing == static_cast<int>(x)) return static_cast<int>(j);
        throw InvalidArrangement("crossing missing from chord hits");
      };
      int ja = pos_in(ca), jb = pos_in(cb);
      struct Ray {
        int anchor_item, rdart;
      };
      std::vector<Ray> rays = {
          {chords[ca].start_item, cseg_bwd(ca, ja)},
          {chords[ca].end_item, cseg_fwd(ca, ja + 1)},
          {chords[cb].start_item, cseg_bwd(cb, jb)},
          {chords[cb].end_item, cseg_fwd(cb, jb + 1)},
      };
      // Ascending boundary items run clockwise around the face interior
      // (faces sit on the right of their walks), so counterclockwise ray
      // order is descending anchor order.
      std::sort(rays.begin(), rays.end(),
                [](const Ray& r, const Ray& s) { return r.anchor_item > s.anchor_item; });
      std::vector<int> rot;
      for (const Ray& r : rays) rot.push_back(r.rdart);
      rotations[cross_vertex_offset + static_cast<int>(x)] = std::move(rot);
    }

    A.rsigma_.assign(2 * n_redges, -1);
    A.rvertex_of_rdart_.assign(2 * n_redges, -1);
    for (int v = 0; v < A.rvertex_count_; ++v) {
      const auto& rot = rotations[v];
      for (size_t i = 0; i < rot.size(); ++i) {
        int rd = rot[i];
        if (A.rsigma_[rd] != -1) throw InvalidArrangement("refined dart in two rotations");
        A.rsigma_[rd] = rot[(i + 1) % rot.size()];
        A.rvertex_of_rdart_[rd] = v;
      }
    }
    for (int rd = 0; rd < 2 * n_redges; ++rd)
      if (A.rsigma_[rd] == -1) throw InvalidArrangement("refined dart missing");

    A.rface_of_.assign(2 * n_redges, -1);
    A.rfaces_.clear();
    for (int start = 0; start < 2 * n_redges; ++start) {
      if (A.rface_of_[start] != -1) continue;
      std::vector<int> walk;
      int rd = start;
      while (A.rface_of_[rd] == -1) {
        A.rface_of_[rd] = static_cast<int>(A.rfaces_.size());
        walk.push_back(rd);
        rd = A.rsigma_[rd ^ 1];
      }
      if (rd != start) throw InvalidArrangement("refined face orbit broken");
      A.rfaces_.push_back(std::move(walk));
    }

    auto rdart_base_face = [&](int rd) {
      int re = rd / 2;
      if (A.redge_base_edge_[re] >= 0) {
        int e = A.redge_base_edge_[re];
        return M.face_of((rd & 1) ? 2 * e + 1 : 2 * e);
      }
      int c = static_cast<int>(std::upper_bound(A.cseg_offset_.begin(),
                                                A.cseg_offset_.end(), re) -
                               A.cseg_offset_.begin()) -
              1;
      return chords[c].face;
    };
    A.rface_base_face_.assign(A.rfaces_.size(), -1);
    A.rface_is_cap_.assign(A.rfaces_.size(), 0);
    A.rface_marked_.assign(A.rfaces_.size(), 0);
    for (size_t f = 0; f < A.rfaces_.size(); ++f) {
      int bf = rdart_base_face(A.rfaces_[f][0]);
      for (int rd : A.rfaces_[f])
        if (rdart_base_face(rd) != bf)
          throw InvalidArrangement("refined face crosses base faces");
      A.rface_base_face_[f] = bf;
      A.rface_is_cap_[f] = M.is_boundary_face(bf);
      A.rface_marked_[f] = M.is_marked_face(bf);
    }

    if (A.euler_characteristic_closed() != M.euler_characteristic_closed())
      throw InvalidArrangement("overlay changed the euler characteristic");
  }
};

Arrangement::Arrangement(CombinatorialMap base, std::vector<CurvePath> members,
                         OverlayOptions options)
    : base_(std::move(base)), members_(std::move(members)), options_(options) {
  OverlayBuilder b(*this);
  b.run();
}

Arrangement overlay(CombinatorialMap base, std::vector<CurvePath> members,
                    OverlayOptions options) {
  return Arrangement(std::move(base), std::move(members), options);
}

int Arrangement::member_index(const std::string& id) const {
  for (int i = 0; i < member_count(); ++i)
    if (members_[i].id == id) return i;
  return -1;
}

int Arrangement::euler_characteristic_closed() const {
  return rvertex_count_ - static_cast<int>(rsigma_.size()) / 2 + rface_count();
}

Arrangement::WallOwner Arrangement::wall_owner(int rdart) const {
  WallOwner w;
  int re = rdart / 2;
  if (redge_chord_[re].member >= 0) {
    w.member = redge_chord_[re].member;
    w.chord = redge_chord_[re].chord;
  } else {
    w.circle_edge = redge_circle_[re];
  }
  return w;
}

const std::vector<Arrangement::ChordHit>& Arrangement::chord_hits(int member,
                                                                  int chord) const {
  return hits_[hits_offset_[member] + chord];
}

OrderKey Arrangement::key_beside(int edge, int point_index, bool increasing) const {
  const auto& pts = edge_points_[edge];
  const OrderKey& k = pts[point_index].key;
  if (increasing) {
    if (point_index + 1 < static_cast<int>(pts.size()))
      return OrderKey::midpoint(k, pts[point_index + 1].key);
    return k.offset(1);
  }
  if (point_index > 0) return OrderKey::midpoint(pts[point_index - 1].key, k);
  return k.offset(-1);
}

bool Arrangement::increasing_side_in_region(int edge, int point_index,
                                            int region) const {
  int up_redge = eseg_offset_[edge] + point_index + 1;
  int into = 2 * up_redge + 1; // rdart pointing back down into the point
  return region_of_rface(rface_of_[into]) == region;
}

int Arrangement::region_of_rface(int rface) const {
  compute_regions();
  return region_of_rface_[rface];
}

const std::vector<Region>& Arrangement::regions() const {
  compute_regions();
  return regions_;
}

void Arrangement::compute_regions() const {
  if (regions_computed_) return;
  if (!regions_valid_)
    throw InvalidArrangement(
        "region analysis unavailable: three members pairwise intersect inside one face");
  regions_computed_ = true;

  const int nf = rface_count();
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const int n_redges = static_cast<int>(rsigma_.size()) / 2;
  for (int re = 0; re < n_redges; ++re) {
    if (redge_wall_[re]) continue;
    int f1 = find(rface_of_[2 * re]);
    int f2 = find(rface_of_[2 * re + 1]);
    if (f1 != f2) parent[std::max(f1, f2)] = std::min(f1, f2);
  }

  region_of_rface_.assign(nf, -1);
  std::map<int, int> root_to_region;
  for (int f = 0; f < nf; ++f) {
    if (rface_is_cap_[f]) continue;
    int r = find(f);
    if (!root_to_region.count(r)) {
      int id = static_cast<int>(regions_.size());
      root_to_region[r] = id;
      regions_.push_back({});
      regions_.back().id = id;
    }
    int id = root_to_region[r];
    region_of_rface_[f] = id;
    regions_[id].faces.push_back(f);
    if (rface_marked_[f]) regions_[id].puncture_count++;
  }

  std::vector<int> v_int(regions_.size(), 0), e_int(regions_.size(), 0);
  for (int re = 0; re < n_redges; ++re) {
    if (redge_wall_[re]) continue;
    e_int[region_of_rface_[rface_of_[2 * re]]]++;
  }
  {
    std::vector<std::vector<int>> at(rvertex_count_);
    for (int rd = 0; rd < static_cast<int>(rsigma_.size()); ++rd)
      at[rvertex_of_rdart_[rd]].push_back(rd);
    for (int v = 0; v < rvertex_count_; ++v) {
      if (at[v].empty()) continue;
      bool interior = true;
      for (int rd : at[v])
        if (redge_wall_[rd / 2]) interior = false;
      if (!interior) continue;
      v_int[region_of_rface_[rface_of_[at[v][0]]]]++;
    }
  }
  for (auto& r : regions_)
    r.euler_char = v_int[r.id] - e_int[r.id] + static_cast<int>(r.faces.size());

  // Successor along the region boundary: advance the face walk, hopping
  // across scaffolding edges into the neighbouring refined face.
  auto next_wall = [&](int rd) {
    int x = rsigma_[rd ^ 1];
    while (!redge_wall_[x / 2]) x = rsigma_[x];
    return x;
  };
  std::vector<char> used(rsigma_.size(), 0);
  for (int rd = 0; rd < static_cast<int>(rsigma_.size()); ++rd) {
    if (used[rd] || !redge_wall_[rd / 2]) continue;
    int f = rface_of_[rd];
    if (rface_is_cap_[f]) continue;
    int region = region_of_rface_[f];
    std::vector<int> walk;
    int x = rd;
    while (!used[x]) {
      used[x] = 1;
      walk.push_back(x);
      x = next_wall(x);
    }
    if (x != rd) throw InvalidArrangement("region boundary walk broken");
    regions_[region].walks.push_back(std::move(walk));
  }

  for (auto& r : regions_) {
    std::set<int> circles;
    for (const auto& walk : r.walks)
      for (int rd : walk)
        if (redge_circle_[rd / 2] >= 0) circles.insert(redge_circle_[rd / 2]);
    r.adjacent_circles.assign(circles.begin(), circles.end());
    r.touches_boundary = !circles.empty();
    if (r.euler_char == 1 && r.puncture_count == 0)
      r.classification = Region::Class::OpenDisk;
    else if (r.euler_char == 1 && r.puncture_count == 1)
      r.classification = Region::Class::OncePuncturedDisk;
    else
      r.classification = Region::Class::Other;
    r.collar = (r.euler_char == 0 && r.puncture_count == 0 &&
                r.adjacent_circles.size() == 1);
  }
}

// ---------------------------------------------------------------------------
// Bigons, reduction, intersection numbers
// ---------------------------------------------------------------------------

std::vector<Bigon> all_bigons(const Arrangement& arr, int a, int b) {
  std::vector<Bigon> out;
  for (const auto& region : arr.regions()) {
    if (region.puncture_count != 0 || region.euler_char != 1 ||
        region.touches_boundary || region.walks.size() != 1)
      continue;
    const auto& walk0 = region.walks[0];
    const int n = static_cast<int>(walk0.size());
    if (n == 0) continue;
    auto owner = [&](int idx) { return arr.wall_owner(walk0[idx]); };
    bool circle = false;
    int start = -1;
    for (int i = 0; i < n; ++i) {
      if (owner(i).member < 0) circle = true;
      if (start < 0 && owner(i).member != owner((i - 1 + n) % n).member) start = i;
    }
    if (circle || start < 0) continue;

    struct Run {
      int member;
      bool forward;
      std::vector<int> chords;
    };
    std::vector<Run> runs;
    bool bad = false;
    for (int i = 0; i < n && !bad; ++i) {
      int rd = walk0[(start + i) % n];
      int rd_next = walk0[(start + i + 1) % n];
      auto o = arr.wall_owner(rd);
      bool fwd = (rd & 1) == 0;
      if (runs.empty() || runs.back().member != o.member)
        runs.push_back({o.member, fwd, {}});
      if (runs.back().forward != fwd) bad = true;
      if (runs.back().chords.empty() || runs.back().chords.back() != o.chord)
        runs.back().chords.push_back(o.chord);
      // A run passing straight through a crossing means the disk is pinched
      // there, not a bigon.
      if (arr.wall_owner(rd_next).member == o.member &&
          arr.vertex_is_crossing(arr.head_vertex(rd)))
        bad = true;
    }
    if (bad || runs.size() != 2) continue;
    if (!((runs[0].member == a && runs[1].member == b) ||
          (runs[0].member == b && runs[1].member == a)))
      continue;

    Bigon bg;
    bg.region = region.id;
    bg.member_a = a;
    bg.member_b = b;
    auto fill = [&](const Run& run, int member, int& lo, int& hi, bool& fwd) {
      fwd = run.forward;
      const int m = arr.member(member).chord_count();
      const auto& cs = run.chords;
      for (size_t i = 0; i + 1 < cs.size(); ++i) {
        int expect = fwd ? (cs[i] + 1) % m : (cs[i] - 1 + m) % m;
        if (cs[i + 1] != expect) return false;
      }
      lo = fwd ? cs.front() : cs.back();
      hi = fwd ? cs.back() : cs.front();
      return true;
    };
    const Run& run_a = runs[0].member == a ? runs[0] : runs[1];
    const Run& run_b = runs[0].member == a ? runs[1] : runs[0];
    if (!fill(run_a, a, bg.a_lo, bg.a_hi, bg.a_walk_forward))
      throw InvalidArrangement("bigon run skips chords");
    if (!fill(run_b, b, bg.b_lo, bg.b_hi, bg.b_walk_forward))
      throw InvalidArrangement("bigon run skips chords");
    out.push_back(bg);
  }
  return out;
}

std::optional<Bigon> find_bigon(const Arrangement& arr, int a, int b) {
  auto found = all_bigons(arr, a, b);
  if (found.empty()) return std::nullopt;
  return found.front();
}

namespace {

// Slides one side of the bigon across the other: the moving member's covered
// steps are replaced by a parallel copy of the fixed member's covered steps,
// laid on the far side of the fixed strand.
CurvePath rewrite_across_bigon(const Arrangement& arr, const Bigon& bg,
                               bool move_b = false) {
  const int a = move_b ? bg.member_b : bg.member_a;
  const int b = move_b ? bg.member_a : bg.member_b;
  const int a_lo = move_b ? bg.b_lo : bg.a_lo;
  const int a_hi = move_b ? bg.b_hi : bg.a_hi;
  const bool a_fwd = move_b ? bg.b_walk_forward : bg.a_walk_forward;
  const int b_lo = move_b ? bg.a_lo : bg.b_lo;
  const int b_hi = move_b ? bg.a_hi : bg.b_hi;
  const bool b_fwd = move_b ? bg.a_walk_forward : bg.b_walk_forward;

  const CurvePath& pa = arr.member(a);
  const CurvePath& pb = arr.member(b);
  const int ma = pa.step_count();
  const int mb = pb.step_count();

  // Steps of b strictly inside the bigon, in b-forward order.
  std::vector<int> b_inside;
  {
    int len = (b_hi - b_lo + mb) % mb;
    for (int k = 1; k <= len; ++k) b_inside.push_back((b_lo + k) % mb);
  }

  // The region walk runs one member from junction X to junction Y and the
  // other back from Y to X; the insertion must bridge X to Y in the moving
  // member's forward order.
  const bool insertion_b_forward = a_fwd ? !b_fwd : b_fwd;

  std::vector<PathStep> inserted;
  auto push_parallel = [&](int bstep, bool same_direction) {
    const PathStep& st = pb.steps[bstep];
    int e = st.dart / 2;
    const auto& pts = arr.edge_points()[e];
    int idx = -1;
    for (size_t i = 0; i < pts.size(); ++i)
      if (pts[i].member == b && pts[i].step == bstep) idx = static_cast<int>(i);
    if (idx < 0) throw InvalidArrangement("missing edge point for rewrite");
    bool inc_in_region = arr.increasing_side_in_region(e, idx, bg.region);
    PathStep ns;
    ns.dart = same_direction ? st.dart : CombinatorialMap::opp(st.dart);
    ns.key = arr.key_beside(e, idx, !inc_in_region);
    inserted.push_back(ns);
  };
  if (insertion_b_forward) {
    for (int s : b_inside) push_parallel(s, true);
  } else {
    for (auto it = b_inside.rbegin(); it != b_inside.rend(); ++it)
      push_parallel(*it, false);
  }

  // Replace a's covered interior steps (a_lo+1 .. a_hi cyclically).
  CurvePath out;
  out.id = pa.id;
  out.kind = pa.kind;
  if (pa.closed()) {
    int removed = (a_hi - a_lo + ma) % ma;
    int idx = (a_hi + 1) % ma;
    for (int cnt = 0; cnt < ma - removed; ++cnt) {
      out.steps.push_back(pa.steps[idx]);
      idx = (idx + 1) % ma;
    }
    // The kept block ends at step a_lo; the insertion continues from there.
    for (const auto& st : inserted) out.steps.push_back(st);
  } else {
    for (int s = 0; s <= a_lo; ++s) out.steps.push_back(pa.steps[s]);
    for (const auto& st : inserted) out.steps.push_back(st);
    for (int s = a_hi + 1; s < ma; ++s) out.steps.push_back(pa.steps[s]);
  }
  return tauten(out);
}

} // namespace

ReduceResult reduce_bigons(const CombinatorialMap& base, const CurvePath& a,
                           const CurvePath& b) {
  OverlayOptions opts;
  opts.allow_key_ties = true;
  CurvePath pa = a, pb = b;
  int initial = -1, last = -1;
  for (;;) {
    Arrangement arr(base, {pa, pb}, opts);
    int count = arr.total_crossings();
    if (initial < 0) initial = count;
    if (last >= 0 && count >= last)
      throw InvalidArrangement("bigon reduction failed to make progress");
    last = count;
    if (count == 0) return {std::move(arr), initial};
    auto bg = find_bigon(arr, 0, 1);
    if (!bg) return {std::move(arr), initial - count};
    pa = rewrite_across_bigon(arr, *bg);
  }
}

ReduceResult reduce_bigons(const Arrangement& arr, const std::string& a,
                           const std::string& b) {
  int ia = arr.member_index(a), ib = arr.member_index(b);
  if (ia < 0 || ib < 0) throw NonMember("reduce_bigons: unknown member id");
  return reduce_bigons(arr.base(), arr.member(ia), arr.member(ib));
}

int intersection_number(const CombinatorialMap& base, const CurvePath& a,
                        const CurvePath& b) {
  if (a.steps == b.steps) return 0; // identical representatives are parallel
  return reduce_bigons(base, a, b).arrangement.total_crossings();
}

int intersection_number(const Arrangement& arr, const std::string& a,
                        const std::string& b) {
  int ia = arr.member_index(a), ib = arr.member_index(b);
  if (ia < 0 || ib < 0) throw NonMember("intersection_number: unknown member id");
  if (ia == ib) throw NonMember("intersection_number requires distinct members");
  return intersection_number(arr.base(), arr.member(ia), arr.member(ib));
}

std::vector<int> reduction_terminal_counts_oracle(const CombinatorialMap& base,
                                                  const CurvePath& a,
                                                  const CurvePath& b, int max_states) {
  OverlayOptions opts;
  opts.allow_key_ties = true;
  std::set<std::string> visited;
  std::vector<int> terminals;
  int states = 0;

  auto serialize = [](const CurvePath& p, const CurvePath& q) {
    std::ostringstream os;
    for (const auto& s : p.steps) os << s.dart << "@" << s.key.str() << ";";
    os << "|";
    for (const auto& s : q.steps) os << s.dart << "@" << s.key.str() << ";";
    return os.str();
  };

  std::function<void(CurvePath, CurvePath)> explore = [&](CurvePath pa, CurvePath pb) {
    if (!visited.insert(serialize(pa, pb)).second) return;
    if (++states > max_states)
      throw BudgetExceeded("reduction oracle exceeded its state budget");
    Arrangement arr(base, {pa, pb}, opts);
    auto bigons = all_bigons(arr, 0, 1);
    if (bigons.empty()) {
      terminals.push_back(arr.total_crossings());
      return;
    }
    // Branch over every bigon and both slide directions.
    for (const auto& bg : bigons) {
      explore(rewrite_across_bigon(arr, bg, false), pb);
      explore(pa, rewrite_across_bigon(arr, bg, true));
    }
  };
  explore(a, b);
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  return terminals;
}

AlexanderReport check_alexander_system(const Arrangement& arr) {
  AlexanderReport rep;
  const int n = arr.member_count();
  rep.intersection_matrix.assign(n, std::vector<int>(n, 0));

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (arr.crossing_count(i, j) == 0) continue;
      auto reduced = reduce_bigons(arr.base(), arr.member(i), arr.member(j));
      if (reduced.removed > 0) {
        rep.minimal_position_ok = false;
        // Witness: the first bigon of the placed pair.
        Arrangement pair(arr.base(), {arr.member(i), arr.member(j)},
                         {.allow_key_ties = true});
        auto bg = find_bigon(pair, 0, 1);
        rep.bigon_pairs.push_back({i, j, bg ? bg->region : -1});
      }
      rep.intersection_matrix[i][j] = rep.intersection_matrix[j][i] =
          reduced.arrangement.total_crossings();
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rep.intersection_matrix[i][j] != 0) continue;
      // Arcs and closed curves are never isotopic to one another.
      if (arr.member(i).kind != arr.member(j).kind) continue;
      bool equal = true;
      for (int k = 0; k < n && equal; ++k) {
        if (k == i || k == j) continue;
        if (rep.intersection_matrix[i][k] != rep.intersection_matrix[j][k])
          equal = false;
      }
      if (equal) rep.indeterminate_pairs.push_back({i, j});
    }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (rep.intersection_matrix[i][j] > 0 && rep.intersection_matrix[j][k] > 0 &&
            rep.intersection_matrix[k][i] > 0) {
          rep.triples_ok = false;
          rep.bad_triples.push_back({i, j, k});
        }

  return rep;
}

FillingReport is_filling(const Arrangement& arr) {
  FillingReport rep;
  for (const auto& r : arr.regions()) {
    if (r.classification == Region::Class::OpenDisk)
      rep.disks++;
    else if (r.classification == Region::Class::OncePuncturedDisk)
      rep.punctured_disks++;
    else if (r.collar)
      rep.collars++;
    else {
      rep.filling = false;
      if (!rep.witness) rep.witness = r;
    }
  }
  return rep;
}

} // namespace alexsys::arr
