#include "alexsys/combinatorial_map.hpp"

#include "alexsys/errors.hpp"

#include <algorithm>
#include <map>

namespace alexsys::cmap {

int CombinatorialMap::boundary_face_total() const {
  int n = 0;
  for (char c : boundary_face_) n += c != 0;
  return n;
}

int CombinatorialMap::marked_face_total() const {
  int n = 0;
  for (char c : marked_face_) n += c != 0;
  return n;
}

int CombinatorialMap::euler_characteristic_closed() const {
  return vertex_count() - edge_count() + face_count();
}

int CombinatorialMap::euler_characteristic_piece() const {
  return vertex_count() - edge_count() + face_count() - boundary_face_total() -
         marked_face_total();
}

int CombinatorialMap::edge_by_name(const std::string& name) const {
  for (int e = 0; e < edge_count(); ++e)
    if (edge_names_[e] == name) return e;
  return -1;
}

std::string CombinatorialMap::dart_name(int d) const {
  return edge_names_[d / 2] + ((d & 1) ? "-" : "+");
}

int CombinatorialMap::dart_by_name(const std::string& name) const {
  if (name.empty()) throw InvalidPath("empty dart name");
  char sign = name.back();
  if (sign != '+' && sign != '-')
    throw InvalidPath("dart name must end in + or -: " + name);
  int e = edge_by_name(name.substr(0, name.size() - 1));
  if (e < 0) throw InvalidPath("unknown edge in dart name: " + name);
  return 2 * e + (sign == '-' ? 1 : 0);
}

int CombinatorialMap::add_edge(const std::string& name) {
  int e = edge_count();
  edge_names_.push_back(name);
  sigma_.push_back(-1);
  sigma_.push_back(-1);
  return e;
}

void CombinatorialMap::set_vertex(const std::vector<int>& rotation) {
  if (rotation.empty()) throw InvalidPath("empty vertex rotation");
  vertices_.push_back(rotation);
  for (size_t i = 0; i < rotation.size(); ++i) {
    int d = rotation[i];
    int next = rotation[(i + 1) % rotation.size()];
    if (sigma_[d] != -1) throw InvalidPath("dart assigned to two vertices");
    sigma_[d] = next;
  }
}

void CombinatorialMap::finalize(const std::vector<int>& boundary_loop_edges,
                                const std::vector<int>& puncture_loop_edges) {
  const int n = dart_count();
  for (int d = 0; d < n; ++d)
    if (sigma_[d] < 0) throw InvalidPath("dart missing from every vertex rotation");

  // Canonicalize vertex cycles to start at their minimal dart, sort by it.
  for (auto& v : vertices_) {
    auto it = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), it, v.end());
  }
  std::sort(vertices_.begin(), vertices_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  vertex_of_.assign(n, -1);
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
    for (int d : vertices_[v]) vertex_of_[d] = v;

  faces_.clear();
  face_of_.assign(n, -1);
  pos_in_face_.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (face_of_[start] != -1) continue;
    std::vector<int> walk;
    int d = start;
    while (face_of_[d] == -1) {
      face_of_[d] = static_cast<int>(faces_.size());
      pos_in_face_[d] = static_cast<int>(walk.size());
      walk.push_back(d);
      d = face_next(d);
    }
    if (d != start) throw InvalidPath("face orbit is not a cycle");
    faces_.push_back(std::move(walk));
  }

  boundary_face_.assign(faces_.size(), 0);
  marked_face_.assign(faces_.size(), 0);
  for (int e : boundary_loop_edges) boundary_face_[monogon_face(e)] = 1;
  for (int e : puncture_loop_edges) marked_face_[monogon_face(e)] = 1;
}

int CombinatorialMap::monogon_face(int loop_edge) const {
  int f = face_of_[2 * loop_edge + 1];
  if (faces_[f].size() != 1) {
    f = face_of_[2 * loop_edge];
    if (faces_[f].size() != 1)
      throw InvalidPath("loop edge " + edge_names_[loop_edge] + " has no monogon side");
  }
  return f;
}

PieceMap canonical_piece_map(const surface::FiniteTypeSignature& sig) {
  if (sig.genus < 0 || sig.punctures < 0 || sig.boundary < 0)
    throw UnsupportedSignature("negative signature field");
  if (sig.genus == 0 && sig.punctures == 0 && sig.boundary == 0)
    throw UnsupportedSignature("closed sphere has no canonical piece map");

  PieceMap pm;
  pm.sig = sig;
  CombinatorialMap& m = pm.map;
  const int S = sig.punctures + sig.boundary;

  if (S >= 2)
    for (int i = 0; i < S; ++i) pm.e_edges.push_back(m.add_edge("e" + std::to_string(i)));
  for (int k = 0; k < sig.boundary; ++k)
    pm.q_edges.push_back(m.add_edge("q" + std::to_string(k)));
  for (int j = 0; j < sig.punctures; ++j)
    pm.p_edges.push_back(m.add_edge("p" + std::to_string(j)));
  for (int i = 0; i < sig.genus; ++i) {
    pm.a_edges.push_back(m.add_edge("a" + std::to_string(i)));
    pm.b_edges.push_back(m.add_edge("b" + std::to_string(i)));
  }

  auto handle_darts = [&]() {
    std::vector<int> h;
    for (int i = 0; i < sig.genus; ++i) {
      h.push_back(2 * pm.a_edges[i]);
      h.push_back(2 * pm.b_edges[i]);
      h.push_back(2 * pm.a_edges[i] + 1);
      h.push_back(2 * pm.b_edges[i] + 1);
    }
    return h;
  };
  auto loop_edge_at = [&](int k) {
    return k < sig.boundary ? pm.q_edges[k] : pm.p_edges[k - sig.boundary];
  };

  if (S >= 2) {
    // Loop vertices on a cycle; handles ride on vertex 0.
    for (int k = 0; k < S; ++k) {
      int l = loop_edge_at(k);
      std::vector<int> rot = {2 * pm.e_edges[k], 2 * l, 2 * l + 1};
      if (k == 0)
        for (int d : handle_darts()) rot.push_back(d);
      rot.push_back(2 * pm.e_edges[(k - 1 + S) % S] + 1);
      m.set_vertex(rot);
    }
  } else {
    std::vector<int> rot;
    if (S == 1) {
      int l = loop_edge_at(0);
      rot.push_back(2 * l);
      rot.push_back(2 * l + 1);
    }
    for (int d : handle_darts()) rot.push_back(d);
    m.set_vertex(rot);
  }

  m.finalize(pm.q_edges, pm.p_edges);
  return pm;
}

GluedChart glue_boundary(const PieceMap& a, int boundary_index_a,
                         const PieceMap& b, int boundary_index_b) {
  const CombinatorialMap& A = a.map;
  const CombinatorialMap& B = b.map;
  const int qa = a.q_edges.at(boundary_index_a);
  const int qb = b.q_edges.at(boundary_index_b);
  const int ua = 2 * qa, wa = 2 * qa + 1;
  const int ub = 2 * qb, wb = 2 * qb + 1;

  GluedChart out;
  CombinatorialMap& M = out.map;
  out.interface_edge = qa;

  out.a_darts.assign(A.dart_count(), -1);
  for (int e = 0; e < A.edge_count(); ++e) {
    int ne = M.add_edge(A.edge_name(e));
    out.a_darts[2 * e] = 2 * ne;
    out.a_darts[2 * e + 1] = 2 * ne + 1;
  }
  out.b_darts.assign(B.dart_count(), -1);
  for (int e = 0; e < B.edge_count(); ++e) {
    if (e == qb) continue;
    int ne = M.add_edge("o:" + B.edge_name(e));
    out.b_darts[2 * e] = 2 * ne;
    out.b_darts[2 * e + 1] = 2 * ne + 1;
  }
  // Boundary gluing identifies the circles with opposite orientations.
  out.b_darts[ub] = out.a_darts[wa];
  out.b_darts[wb] = out.a_darts[ua];

  const int va = A.vertex_of(ua);
  const int vb = B.vertex_of(ub);
  for (int v = 0; v < A.vertex_count(); ++v) {
    if (v == va) continue;
    std::vector<int> rot;
    for (int d : A.vertex_rotation(v)) rot.push_back(out.a_darts[d]);
    M.set_vertex(rot);
  }
  for (int v = 0; v < B.vertex_count(); ++v) {
    if (v == vb) continue;
    std::vector<int> rot;
    for (int d : B.vertex_rotation(v)) rot.push_back(out.b_darts[d]);
    M.set_vertex(rot);
  }

  // Merged vertex: cross the interface at u_a, sweep A's sector (the old
  // rotation from the successor of w_a around to the predecessor of u_a),
  // cross back at w_a, then sweep B's sector.
  auto sector = [](const CombinatorialMap& map, int vtx, int u, int w) {
    const auto& rot = map.vertex_rotation(vtx);
    const int n = static_cast<int>(rot.size());
    int pos_w = -1;
    for (int i = 0; i < n; ++i)
      if (rot[i] == w) pos_w = i;
    std::vector<int> chain;
    for (int i = (pos_w + 1) % n; rot[i] != u; i = (i + 1) % n) chain.push_back(rot[i]);
    return chain;
  };

  std::vector<int> rot = {out.a_darts[ua]};
  for (int d : sector(A, va, ua, wa)) rot.push_back(out.a_darts[d]);
  rot.push_back(out.a_darts[wa]);
  for (int d : sector(B, vb, ub, wb)) rot.push_back(out.b_darts[d]);
  M.set_vertex(rot);

  std::vector<int> bdry, punct;
  for (size_t k = 0; k < a.q_edges.size(); ++k)
    if (static_cast<int>(k) != boundary_index_a) bdry.push_back(a.q_edges[k]);
  for (size_t k = 0; k < b.q_edges.size(); ++k)
    if (static_cast<int>(k) != boundary_index_b)
      bdry.push_back(out.b_darts[2 * b.q_edges[k]] / 2);
  for (int e : a.p_edges) punct.push_back(e);
  for (int e : b.p_edges) punct.push_back(out.b_darts[2 * e] / 2);
  M.finalize(bdry, punct);
  return out;
}

} // namespace alexsys::cmap
