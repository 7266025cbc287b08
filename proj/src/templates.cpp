#include "alexsys/templates.hpp"

#include "alexsys/errors.hpp"
#include "embedded_templates.hpp"
#include "json.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace alexsys::gamma {

using nlohmann::json;

FillingTemplate parse_template_json(const std::string& text) {
  json j = json::parse(text);
  FillingTemplate t;
  t.name = j.at("name").get<std::string>();
  t.provenance = j.value("provenance", "");
  t.signature = {j.at("signature").at("genus").get<int>(),
                 j.at("signature").at("punctures").get<int>(),
                 j.at("signature").at("boundary").get<int>()};
  cmap::PieceMap pm = cmap::canonical_piece_map(t.signature);

  auto parse_steps = [&](const json& arr) {
    std::vector<arr::PathStep> steps;
    for (const auto& s : arr) {
      arr::PathStep st;
      st.dart = pm.map.dart_by_name(s.at(0).get<std::string>());
      OrderKey key;
      if (!OrderKey::parse(s.at(1).get<std::string>(), key))
        throw InvalidPath("bad order key in template " + t.name);
      st.key = key;
      steps.push_back(st);
    }
    return steps;
  };

  for (const auto& m : j.at("members")) {
    arr::CurvePath p;
    p.id = m.at("id").get<std::string>();
    p.kind = m.value("kind", "closed") == "arc" ? arr::PathKind::Arc
                                                : arr::PathKind::Closed;
    p.steps = parse_steps(m.at("steps"));
    t.members.push_back(std::move(p));
  }
  t.dual_arcs.assign(t.signature.boundary, {});
  if (j.contains("dual_arcs")) {
    for (auto it = j.at("dual_arcs").begin(); it != j.at("dual_arcs").end(); ++it) {
      int k = std::stoi(it.key());
      if (k < 0 || k >= t.signature.boundary)
        throw InvalidPath("dual arc index out of range in template " + t.name);
      t.dual_arcs[k] = parse_steps(it.value());
    }
  }
  if (j.contains("phi_pair")) {
    t.phi_pair = {j.at("phi_pair").at(0).get<std::string>(),
                  j.at("phi_pair").at(1).get<std::string>()};
  }
  t.gamma_ready = j.value("gamma_ready", false);
  return t;
}

namespace {

std::vector<FillingTemplate>& registry() {
  static std::vector<FillingTemplate> reg = [] {
    std::vector<FillingTemplate> out;
    for (const char* text : detail::kEmbeddedTemplates) out.push_back(parse_template_json(text));
    return out;
  }();
  return reg;
}

} // namespace

const FillingTemplate& standard_filling_system(const surface::FiniteTypeSignature& sig) {
  const FillingTemplate* fallback = nullptr;
  for (const auto& t : registry()) {
    if (!(t.signature == sig)) continue;
    if (t.gamma_ready) return t;
    if (!fallback) fallback = &t;
  }
  if (fallback) return *fallback;
  throw UnsupportedSignature("no filling template for signature " + sig.str());
}

const FillingTemplate* template_by_name(const std::string& name) {
  for (const auto& t : registry())
    if (t.name == name) return &t;
  return nullptr;
}

std::vector<const FillingTemplate*> all_templates() {
  std::vector<const FillingTemplate*> out;
  for (const auto& t : registry()) out.push_back(&t);
  return out;
}

TemplateAudit audit_template(const FillingTemplate& t, bool verbose) {
  TemplateAudit audit;
  auto note = [&](const std::string& s) { audit.notes.push_back(s); };
  cmap::PieceMap pm = cmap::canonical_piece_map(t.signature);

  std::vector<arr::CurvePath> arcs;
  for (size_t k = 0; k < t.dual_arcs.size(); ++k) {
    if (t.dual_arcs[k].empty()) continue;
    arr::CurvePath a;
    a.id = "arc.q" + std::to_string(k);
    a.kind = arr::PathKind::Arc;
    a.steps = t.dual_arcs[k];
    arcs.push_back(std::move(a));
  }

  try {
    arr::Arrangement members_only(pm.map, t.members);
    audit.overlay_ok = true;
    for (const auto& p : t.members)
      if (arr::tauten(p).step_count() != p.step_count()) {
        audit.overlay_ok = false;
        note("member " + p.id + " carries a removable edge detour");
      }
    for (const auto& a : arcs)
      if (arr::tauten(a).step_count() != a.step_count()) {
        audit.overlay_ok = false;
        note("arc " + a.id + " carries a removable edge detour");
      }

    auto rep = arr::check_alexander_system(members_only);
    audit.alexander_ok = rep.accepted();
    if (!rep.minimal_position_ok)
      for (const auto& b : rep.bigon_pairs)
        note("bigon between " + t.members[b.member_a].id + " and " +
             t.members[b.member_b].id);
    for (const auto& [i, j] : rep.indeterminate_pairs)
      note("indeterminate pair " + t.members[i].id + " / " + t.members[j].id);
    for (const auto& tri : rep.bad_triples)
      note("pairwise-crossing triple " + t.members[tri[0]].id + "," +
           t.members[tri[1]].id + "," + t.members[tri[2]].id);

    auto fill = arr::is_filling(members_only);
    audit.filling_ok = fill.filling;
    if (!fill.filling && fill.witness)
      note("non-disk region: chi=" + std::to_string(fill.witness->euler_char) +
           " punctures=" + std::to_string(fill.witness->puncture_count) +
           " circles=" + std::to_string(fill.witness->adjacent_circles.size()));
    if (verbose) {
      std::ostringstream os;
      os << "regions:";
      for (const auto& r : members_only.regions())
        os << " [chi=" << r.euler_char << " p=" << r.puncture_count
           << " circ=" << r.adjacent_circles.size() << "]";
      note(os.str());
    }

    audit.twist_detectable = true;
    for (int i = 0; i < members_only.member_count(); ++i) {
      bool crossed = false;
      for (int j = 0; j < members_only.member_count(); ++j)
        if (i != j && rep.intersection_matrix[i][j] > 0) crossed = true;
      if (!crossed) {
        audit.twist_detectable = false;
        note("member " + t.members[i].id + " is crossed by nothing");
      }
    }

    // Dual arcs: disjoint from one another, in minimal position with the
    // members, crossing a pairwise-disjoint member set, at least one member.
    audit.arcs_ok = true;
    std::vector<arr::CurvePath> all = t.members;
    for (const auto& a : arcs) all.push_back(a);
    arr::Arrangement full(pm.map, all);
    auto full_rep = arr::check_alexander_system(full);
    if (!full_rep.accepted()) {
      audit.arcs_ok = false;
      note("members+arcs system fails the Alexander conditions");
      for (const auto& b : full_rep.bigon_pairs)
        note("  bigon " + all[b.member_a].id + " / " + all[b.member_b].id);
      for (const auto& tri : full_rep.bad_triples)
        note("  triple " + all[tri[0]].id + "," + all[tri[1]].id + "," +
             all[tri[2]].id);
      for (const auto& [i, j] : full_rep.indeterminate_pairs)
        note("  indeterminate " + all[i].id + " / " + all[j].id);
    }
    const int nm = static_cast<int>(t.members.size());
    for (size_t a = 0; a < arcs.size(); ++a) {
      int ia = nm + static_cast<int>(a);
      int crossed = 0;
      for (int m = 0; m < nm; ++m) crossed += full_rep.intersection_matrix[ia][m] > 0;
      if (crossed == 0) {
        audit.arcs_ok = false;
        note("arc " + arcs[a].id + " crosses no member (boundary-parallel)");
      }
      for (size_t b = a + 1; b < arcs.size(); ++b)
        if (full_rep.intersection_matrix[ia][nm + static_cast<int>(b)] != 0) {
          audit.arcs_ok = false;
          note("arcs " + arcs[a].id + " and " + arcs[b].id + " intersect");
        }
    }

    audit.phi_ok = true;
    if (t.gamma_ready) {
      int pa = members_only.member_index(t.phi_pair[0]);
      int pb = members_only.member_index(t.phi_pair[1]);
      if (pa < 0 || pb < 0) {
        audit.phi_ok = false;
        note("phi pair references unknown members");
      } else if (rep.intersection_matrix[pa][pb] == 0) {
        audit.phi_ok = false;
        note("phi pair members are disjoint");
      }
    }
  } catch (const Error& e) {
    note(std::string("overlay failed: ") + e.what());
  }
  return audit;
}

} // namespace alexsys::gamma
