#pragma once

#include "alexsys/surface.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace alexsys::exhaust {

using surface::FiniteTypeSignature;
using surface::SurfaceDescriptor;

// Cumulative subsurface S_i of the exhaustion.
struct PieceSpec {
  int index = 1; // i >= 1
  FiniteTypeSignature signature;
  std::vector<std::string> attached_boundary_labels; // B_i curve ids
};

// What lies beyond an interface curve. The builder always attaches a shell;
// caps are produced by the mutation machinery and make the curve inessential.
struct Continuation {
  enum class Kind { Shell, DiskCap, PunctureCap, BoundaryAnnulus };
  Kind kind = Kind::Shell;
  int shell = -1; // index into ExhaustionPlan::shells when kind == Shell
};

// One connected component of S_{i+1} \ S_i (level i -> i+1).
struct ShellComponent {
  int inner_level = 1; // between (inner_level, inner_level + 1)
  int component = 0;
  FiniteTypeSignature signature;
  std::vector<std::string> inner_interface;
  std::vector<std::string> outer_interface;
  // Boundary labels in canonical piece-map order: inner circles then outer.
  std::vector<std::string> q_labels;
  bool margin = false; // extra level carried only to support dual curves
};

struct ExhaustionPlan {
  SurfaceDescriptor descriptor;
  int depth = 0;
  std::vector<std::string> seed_q_labels; // S_1 boundary: surface circles then B_1
  std::vector<PieceSpec> pieces;          // cumulative S_1..S_depth
  std::vector<ShellComponent> shells;     // transitions, margin included
  std::vector<std::vector<std::string>> b_sets; // b_sets[i-1] = B_i ids
  std::vector<std::pair<std::string, Continuation>> continuations; // sorted by id

  const Continuation* continuation_of(const std::string& curve) const;
  int level_of_curve(const std::string& curve) const; // B_i level or -1
};

struct ExhaustionVerdict {
  struct Violation {
    int condition = 0; // 1..4 per the principal-exhaustion definition, 0 = bookkeeping
    std::string subject;
    std::string witness;
  };
  bool accepted = true;
  std::vector<Violation> violations;
};

// [OP] build_exhaustion. `depth` counts verified levels; one margin level is
// constructed beyond it so that every B_depth curve has an attached shell.
ExhaustionPlan build_exhaustion(const SurfaceDescriptor& desc, int depth);

// [OP] verify_exhaustion: conditions 1-4 plus euler bookkeeping.
ExhaustionVerdict verify_exhaustion(const ExhaustionPlan& plan);

// [OP] boundaries: B as the indexed disjoint union of the B_i (level
// ascending, then curve id ascending). Throws UnverifiedPlan on a rejected
// plan.
struct BoundarySet {
  std::vector<std::pair<int, std::string>> curves; // (level, id)
};
BoundarySet boundaries(const ExhaustionPlan& plan);

// Seeded plan mutations for the rejection tests.
enum class MutationKind { LowerShellComplexity, CapInterfaceDisk, CapInterfacePuncture };

struct Mutation {
  MutationKind kind;
  int shell = -1;          // LowerShellComplexity target
  std::string curve;       // cap target
};

Mutation choose_mutation(const ExhaustionPlan& plan, std::uint64_t seed);
ExhaustionPlan apply_mutation(const ExhaustionPlan& plan, const Mutation& m);

} // namespace alexsys::exhaust
