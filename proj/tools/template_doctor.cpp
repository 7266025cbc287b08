// Development aid: audits a template JSON file and prints the full
// diagnostic trail (crossing matrix, regions, violations).

#include "alexsys/arrangement.hpp"
#include "alexsys/errors.hpp"
#include "alexsys/templates.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace alexsys;

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: template_doctor <template.json>\n";
    return 1;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot open " << argv[1] << "\n";
    return 1;
  }
  std::stringstream ss;
  ss << in.rdbuf();

  try {
    auto t = gamma::parse_template_json(ss.str());
    std::cout << "template " << t.name << " on " << t.signature.str() << "\n";

    cmap::PieceMap pm = cmap::canonical_piece_map(t.signature);
    std::vector<arr::CurvePath> all = t.members;
    for (size_t k = 0; k < t.dual_arcs.size(); ++k) {
      if (t.dual_arcs[k].empty()) continue;
      all.push_back({"arc.q" + std::to_string(k), arr::PathKind::Arc, t.dual_arcs[k]});
    }
    try {
      arr::Arrangement full(pm.map, all);
      auto rep = arr::check_alexander_system(full);
      std::cout << "intersection matrix (reduced):\n      ";
      for (const auto& p : all) std::cout << p.id.substr(0, 5) << "\t";
      std::cout << "\n";
      for (size_t i = 0; i < all.size(); ++i) {
        std::cout << all[i].id.substr(0, 5) << "\t";
        for (size_t j = 0; j < all.size(); ++j)
          std::cout << (i == j ? std::string(".")
                               : std::to_string(rep.intersection_matrix[i][j]))
                    << "\t";
        std::cout << "\n";
      }
      std::cout << "placed matrix:\n";
      for (size_t i = 0; i < all.size(); ++i) {
        std::cout << all[i].id.substr(0, 5) << "\t";
        for (size_t j = 0; j < all.size(); ++j)
          std::cout << (i == j ? std::string(".")
                               : std::to_string(full.crossing_count(static_cast<int>(i),
                                                                    static_cast<int>(j))))
                    << "\t";
        std::cout << "\n";
      }
      arr::Arrangement members_only(pm.map, t.members);
      std::cout << "member regions:\n";
      for (const auto& r : members_only.regions()) {
        std::cout << "  region " << r.id << ": chi=" << r.euler_char
                  << " punct=" << r.puncture_count
                  << " circles=" << r.adjacent_circles.size() << " [";
        for (int e : r.adjacent_circles) std::cout << pm.map.edge_name(e) << " ";
        std::cout << "] "
                  << (r.classification == arr::Region::Class::OpenDisk ? "disk"
                      : r.classification == arr::Region::Class::OncePuncturedDisk
                          ? "punctured-disk"
                      : r.collar ? "collar" : "OTHER")
                  << "\n";
      }
    } catch (const Error& e) {
      std::cout << "overlay failed: " << e.what() << "\n";
    }

    auto audit = gamma::audit_template(t, true);
    std::cout << "audit: overlay=" << audit.overlay_ok
              << " alexander=" << audit.alexander_ok << " filling=" << audit.filling_ok
              << " twist=" << audit.twist_detectable << " arcs=" << audit.arcs_ok
              << " phi=" << audit.phi_ok << "\n";
    for (const auto& n : audit.notes) std::cout << "  note: " << n << "\n";
    return audit.accepted() ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
