#pragma once

#include "alexsys/arrangement.hpp"
#include "alexsys/combinatorial_map.hpp"
#include "alexsys/surface.hpp"

#include <array>
#include <string>
#include <vector>

namespace alexsys::gamma {

// A verified filling system on the canonical map of one signature, together
// with the dual-arc patterns its boundary circles use and the designated
// curve pair for the shell word of the uncountability construction.
struct FillingTemplate {
  std::string name;
  std::string provenance;
  surface::FiniteTypeSignature signature;
  std::vector<arr::CurvePath> members;
  // dual_arcs[k] = arc pattern leaving and re-entering boundary circle k.
  std::vector<std::vector<arr::PathStep>> dual_arcs;
  std::array<std::string, 2> phi_pair;
  bool gamma_ready = false; // closed members only, every circle has an arc
};

// [OP] standard_filling_system: the library template for a signature.
// Throws UnsupportedSignature when the library has none.
const FillingTemplate& standard_filling_system(const surface::FiniteTypeSignature& sig);

const FillingTemplate* template_by_name(const std::string& name);
std::vector<const FillingTemplate*> all_templates();

struct TemplateAudit {
  bool overlay_ok = false;
  bool alexander_ok = false;
  bool filling_ok = false;
  bool twist_detectable = false;
  bool arcs_ok = false;
  bool phi_ok = false;
  std::vector<std::string> notes;
  bool accepted() const {
    return overlay_ok && alexander_ok && filling_ok && twist_detectable && arcs_ok &&
           phi_ok;
  }
};

// Machine check of the template invariants on its own piece.
TemplateAudit audit_template(const FillingTemplate& t, bool verbose = false);

// Parses one template from its JSON encoding (the repository data format).
FillingTemplate parse_template_json(const std::string& text);

} // namespace alexsys::gamma
