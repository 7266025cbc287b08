#include "alexsys/exhaustion.hpp"

#include "alexsys/errors.hpp"
#include "doctest.h"

#include <set>

using namespace alexsys;
using namespace alexsys::exhaust;
using surface::EndTree;
using surface::SurfaceDescriptor;
using surface::kInfiniteGenus;

namespace {

SurfaceDescriptor lnm() { return {kInfiniteGenus, EndTree::leaf_genus(), 0}; }
SurfaceDescriptor genus4_cantor() { return {4, EndTree::cantor_planar(), 0}; }
SurfaceDescriptor cantor_genus() { return {kInfiniteGenus, EndTree::cantor_genus(), 0}; }

} // namespace

TEST_CASE("Loch Ness Monster exhaustion: pieces of genus 1, 4, 7") {
  auto plan = build_exhaustion(lnm(), 3);
  REQUIRE(plan.pieces.size() == 3);
  CHECK(plan.pieces[0].signature == surface::FiniteTypeSignature{1, 0, 1});
  CHECK(plan.pieces[1].signature == surface::FiniteTypeSignature{4, 0, 1});
  CHECK(plan.pieces[2].signature == surface::FiniteTypeSignature{7, 0, 1});
  for (const auto& p : plan.pieces) CHECK(p.attached_boundary_labels.size() == 1);
  int nonmargin = 0;
  for (const auto& sh : plan.shells)
    if (!sh.margin) {
      CHECK(sh.signature == surface::FiniteTypeSignature{3, 0, 2});
      CHECK(surface::complexity(sh.signature) == 8);
      nonmargin++;
    }
  CHECK(nonmargin == 2);
  CHECK(verify_exhaustion(plan).accepted);
}

TEST_CASE("genus-4 minus a Cantor set: seed carries all genus, planar shells") {
  auto plan = build_exhaustion(genus4_cantor(), 2);
  REQUIRE(plan.pieces.size() == 2);
  CHECK(plan.pieces[0].signature == surface::FiniteTypeSignature{4, 0, 1});
  CHECK(plan.b_sets[0].size() == 1);
  CHECK(plan.b_sets[1].size() == 8);
  for (const auto& sh : plan.shells) {
    CHECK(sh.signature.genus == 0);
    CHECK(surface::complexity(sh.signature) >= 6);
  }
  CHECK(verify_exhaustion(plan).accepted);
}

TEST_CASE("Cantor set of genus ends: binary branching of boundaries") {
  auto plan = build_exhaustion(cantor_genus(), 3);
  CHECK(plan.b_sets[0].size() == 1);
  CHECK(plan.b_sets[1].size() == 2);
  CHECK(plan.b_sets[2].size() == 4);
  CHECK(verify_exhaustion(plan).accepted);
}

TEST_CASE("finite-type descriptors are rejected") {
  SurfaceDescriptor finite{2, std::nullopt, 1};
  CHECK_THROWS_AS(build_exhaustion(finite, 1), FiniteTypeInput);
  SurfaceDescriptor punctured{0, EndTree::node({EndTree::leaf_planar()}), 0};
  CHECK_THROWS_AS(build_exhaustion(punctured, 1), FiniteTypeInput);
}

TEST_CASE("boundary sets are pairwise disjoint and ordered") {
  auto plan = build_exhaustion(genus4_cantor(), 3);
  auto b = boundaries(plan);
  std::set<std::string> seen;
  int prev_level = 0;
  std::string prev_id;
  for (const auto& [level, id] : b.curves) {
    CHECK(seen.insert(id).second);
    CHECK(level >= prev_level);
    if (level == prev_level) CHECK(id > prev_id);
    prev_level = level;
    prev_id = id;
  }
  CHECK(b.curves.size() == 1 + 8 + 64);
}

TEST_CASE("plans are deterministic and prefix-monotone in depth") {
  auto p3 = build_exhaustion(lnm(), 3);
  auto p4 = build_exhaustion(lnm(), 4);
  REQUIRE(p4.pieces.size() == 4);
  for (size_t i = 0; i < p3.pieces.size(); ++i) {
    CHECK(p3.pieces[i].signature == p4.pieces[i].signature);
    CHECK(p3.pieces[i].attached_boundary_labels ==
          p4.pieces[i].attached_boundary_labels);
  }
  auto p3b = build_exhaustion(lnm(), 3);
  CHECK(p3.b_sets == p3b.b_sets);
}

TEST_CASE("unverified plans cannot produce boundaries") {
  auto plan = build_exhaustion(lnm(), 2);
  auto mutated = apply_mutation(plan, {MutationKind::LowerShellComplexity, 0, ""});
  CHECK_THROWS_AS(boundaries(mutated), UnverifiedPlan);
}

TEST_CASE("mutations flip the certificate with the right witness") {
  auto lnm_plan = build_exhaustion(lnm(), 4);
  auto cantor_plan = build_exhaustion(genus4_cantor(), 4);

  SUBCASE("lowering a genus shell fires condition 4") {
    auto m = Mutation{MutationKind::LowerShellComplexity, 1, ""};
    auto v = verify_exhaustion(apply_mutation(lnm_plan, m));
    CHECK_FALSE(v.accepted);
    bool cond4 = false;
    for (const auto& viol : v.violations) cond4 |= viol.condition == 4;
    CHECK(cond4);
  }
  SUBCASE("flattening a planar shell fires condition 4") {
    int target = -1;
    for (size_t s = 0; s < cantor_plan.shells.size(); ++s)
      if (!cantor_plan.shells[s].margin &&
          cantor_plan.shells[s].inner_level == cantor_plan.depth - 1)
        target = static_cast<int>(s);
    REQUIRE(target >= 0);
    auto v = verify_exhaustion(
        apply_mutation(cantor_plan, {MutationKind::LowerShellComplexity, target, ""}));
    CHECK_FALSE(v.accepted);
    bool cond4 = false;
    for (const auto& viol : v.violations) cond4 |= viol.condition == 4;
    CHECK(cond4);
  }
  SUBCASE("capping an interface fires condition 3") {
    std::string curve = lnm_plan.b_sets.back().front();
    auto v = verify_exhaustion(
        apply_mutation(lnm_plan, {MutationKind::CapInterfaceDisk, -1, curve}));
    CHECK_FALSE(v.accepted);
    REQUIRE_FALSE(v.violations.empty());
    bool hit = false;
    for (const auto& viol : v.violations)
      if (viol.condition == 3 && viol.subject == curve) hit = true;
    CHECK(hit);
  }
  SUBCASE("ten seeded mutations are all caught") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto m = choose_mutation(cantor_plan, seed);
      auto v = verify_exhaustion(apply_mutation(cantor_plan, m));
      CHECK_FALSE(v.accepted);
    }
  }
}
