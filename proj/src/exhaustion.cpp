#include "alexsys/exhaustion.hpp"

#include "alexsys/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace alexsys::exhaust {

using surface::EndTree;

namespace {

enum class DirectionKind { GenusChain, GenusCantor, PlanarCantor };

struct OpenInterface {
  std::string curve;
  DirectionKind kind;
};

FiniteTypeSignature shell_signature(DirectionKind k) {
  switch (k) {
    case DirectionKind::GenusChain:
      return {3, 0, 2}; // smallest genus shell with kappa >= 6 on two circles
    case DirectionKind::GenusCantor:
      return {3, 0, 3};
    case DirectionKind::PlanarCantor:
      return {0, 0, 9}; // kappa = 6 forces nine circles on a planar shell
  }
  return {};
}

int outer_count(DirectionKind k) {
  switch (k) {
    case DirectionKind::GenusChain:
      return 1;
    case DirectionKind::GenusCantor:
      return 2;
    case DirectionKind::PlanarCantor:
      return 8;
  }
  return 0;
}

struct RootDirections {
  std::vector<DirectionKind> directions;
  int seed_punctures = 0;
};

RootDirections root_directions(const EndTree& tree) {
  RootDirections out;
  auto add_child = [&](const EndTree& c) {
    switch (c.kind) {
      case EndTree::Kind::LeafPlanar:
        out.seed_punctures++;
        break;
      case EndTree::Kind::LeafGenus:
        out.directions.push_back(DirectionKind::GenusChain);
        break;
      case EndTree::Kind::CantorGenus:
        out.directions.push_back(DirectionKind::GenusCantor);
        break;
      case EndTree::Kind::CantorPlanar:
        out.directions.push_back(DirectionKind::PlanarCantor);
        break;
      case EndTree::Kind::Node:
        throw UnsupportedEndTree("nested node(...) end trees are not supported");
    }
  };
  if (tree.kind == EndTree::Kind::Node) {
    for (const auto& c : tree.children) add_child(c);
  } else {
    add_child(tree);
  }
  return out;
}

} // namespace

const Continuation* ExhaustionPlan::continuation_of(const std::string& curve) const {
  for (const auto& [id, c] : continuations)
    if (id == curve) return &c;
  return nullptr;
}

int ExhaustionPlan::level_of_curve(const std::string& curve) const {
  for (size_t i = 0; i < b_sets.size(); ++i)
    for (const auto& id : b_sets[i])
      if (id == curve) return static_cast<int>(i) + 1;
  return -1;
}

ExhaustionPlan build_exhaustion(const SurfaceDescriptor& desc, int depth) {
  auto verdict = surface::validate_descriptor(desc);
  if (!verdict.accepted)
    throw InvalidConfig("descriptor rejected: " + verdict.violated_clause);
  if (!desc.infinite_type())
    throw FiniteTypeInput("exhaustions are built for infinite-type surfaces only");
  if (depth < 1) throw InvalidConfig("depth must be at least 1");
  if (!desc.ends) throw FiniteTypeInput("infinite-type descriptor without ends");

  RootDirections roots = root_directions(*desc.ends);
  if (roots.directions.empty())
    throw FiniteTypeInput("end tree has no infinite directions");

  ExhaustionPlan plan;
  plan.descriptor = desc;
  plan.depth = depth;

  // Seed piece. Finite total genus is exhausted in S_1; infinite genus gets a
  // single seed handle (the genus shells supply the rest). A planar seed for
  // the Cantor sphere unfolds three binary levels so S_1 carries essential
  // boundary and admits a closed-curve filling system.
  int seed_genus = desc.infinite_genus() ? 1 : desc.total_genus;
  std::vector<OpenInterface> open;
  int next_index = 0;
  auto push_direction = [&](DirectionKind k, int level) {
    std::string id = "B" + std::to_string(level) + "." + std::to_string(next_index++);
    open.push_back({id, k});
    return id;
  };
  std::vector<std::string> b1;
  for (DirectionKind k : roots.directions) {
    if (k == DirectionKind::PlanarCantor && seed_genus == 0 &&
        roots.directions.size() == 1 && roots.seed_punctures == 0 &&
        desc.boundary == 0) {
      for (int i = 0; i < 8; ++i) b1.push_back(push_direction(k, 1));
    } else {
      b1.push_back(push_direction(k, 1));
    }
  }

  PieceSpec s1;
  s1.index = 1;
  s1.signature = {seed_genus, roots.seed_punctures,
                  desc.boundary + static_cast<int>(b1.size())};
  s1.attached_boundary_labels = b1;
  plan.pieces.push_back(s1);
  plan.b_sets.push_back(b1);
  for (int k = 0; k < desc.boundary; ++k)
    plan.seed_q_labels.push_back("dS." + std::to_string(k));
  for (const auto& id : b1) plan.seed_q_labels.push_back(id);

  // Shells level by level; one margin level beyond the verified depth keeps
  // every outermost boundary curve attached to a shell.
  for (int level = 1; level <= depth; ++level) {
    std::vector<OpenInterface> next_open;
    next_index = 0;
    int comp = 0;
    std::vector<std::string> next_b;
    for (const auto& iface : open) {
      ShellComponent shell;
      shell.inner_level = level;
      shell.component = comp++;
      shell.signature = shell_signature(iface.kind);
      shell.margin = (level == depth);
      shell.inner_interface = {iface.curve};
      for (int j = 0; j < outer_count(iface.kind); ++j) {
        std::string id =
            "B" + std::to_string(level + 1) + "." + std::to_string(next_index++);
        shell.outer_interface.push_back(id);
        next_open.push_back({id, iface.kind});
        next_b.push_back(id);
      }
      shell.q_labels = shell.inner_interface;
      for (const auto& id : shell.outer_interface) shell.q_labels.push_back(id);
      int shell_idx = static_cast<int>(plan.shells.size());
      plan.shells.push_back(shell);
      plan.continuations.push_back({iface.curve, {Continuation::Kind::Shell, shell_idx}});
    }
    if (level < depth) {
      plan.b_sets.push_back(next_b);
      PieceSpec piece;
      piece.index = level + 1;
      const PieceSpec& prev = plan.pieces.back();
      piece.signature.genus = prev.signature.genus;
      piece.signature.punctures = prev.signature.punctures;
      for (const auto& sh : plan.shells)
        if (sh.inner_level == level) piece.signature.genus += sh.signature.genus;
      piece.signature.boundary = desc.boundary + static_cast<int>(next_b.size());
      piece.attached_boundary_labels = next_b;
      plan.pieces.push_back(piece);
    }
    open = std::move(next_open);
  }

  std::sort(plan.continuations.begin(), plan.continuations.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return plan;
}

ExhaustionVerdict verify_exhaustion(const ExhaustionPlan& plan) {
  ExhaustionVerdict v;
  auto reject = [&](int cond, const std::string& subject, const std::string& witness) {
    v.accepted = false;
    v.violations.push_back({cond, subject, witness});
  };

  // Condition 1: every piece has finite topological type.
  for (const auto& p : plan.pieces) {
    if (p.signature.genus < 0 || p.signature.punctures < 0 || p.signature.boundary < 0)
      reject(1, "S" + std::to_string(p.index), "signature is not finite type");
  }

  // Condition 2: strict nesting. Interface curves are pairwise distinct,
  // each B_i curve is interior to S_{i+1}: it bounds a shell at level i and
  // is no outer boundary curve of the next piece.
  {
    std::set<std::string> seen;
    for (size_t i = 0; i < plan.b_sets.size(); ++i) {
      for (const auto& id : plan.b_sets[i]) {
        if (!seen.insert(id).second)
          reject(2, id, "curve appears in two boundary sets");
      }
    }
    for (size_t i = 0; i < plan.b_sets.size(); ++i) {
      for (const auto& id : plan.b_sets[i]) {
        const Continuation* c = plan.continuation_of(id);
        if (!c) {
          reject(2, id, "no surface attached beyond the curve");
          continue;
        }
        if (c->kind == Continuation::Kind::Shell) {
          const ShellComponent& sh = plan.shells.at(c->shell);
          if (sh.inner_level != static_cast<int>(i) + 1)
            reject(2, id, "attached shell sits at the wrong level");
          bool found = false;
          for (const auto& inner : sh.inner_interface) found |= inner == id;
          if (!found) reject(2, id, "attached shell does not list the curve as inner");
        }
      }
    }
  }

  // Condition 3: each boundary curve is essential on S. Outward: the curve
  // must continue into a shell rather than a capped disc, once-punctured
  // disc, or a collar onto the surface boundary. Inward: the piece it bounds
  // must not be one of those either.
  for (size_t i = 0; i < plan.b_sets.size(); ++i) {
    const PieceSpec& piece = plan.pieces[i];
    for (const auto& id : plan.b_sets[i]) {
      const Continuation* c = plan.continuation_of(id);
      if (!c) continue;
      switch (c->kind) {
        case Continuation::Kind::Shell:
          break;
        case Continuation::Kind::DiskCap:
          reject(3, id, "inessential boundary curve: bounds a disc");
          break;
        case Continuation::Kind::PunctureCap:
          reject(3, id, "inessential boundary curve: bounds a once-punctured disc");
          break;
        case Continuation::Kind::BoundaryAnnulus:
          reject(3, id, "inessential boundary curve: parallel to the surface boundary");
          break;
      }
      const auto& sig = piece.signature;
      if (i == 0 && sig.genus == 0 && sig.punctures == 0 && sig.boundary == 1)
        reject(3, id, "inessential boundary curve: the seed piece is a disc");
      if (i == 0 && sig.genus == 0 && sig.punctures == 1 && sig.boundary == 1)
        reject(3, id, "inessential boundary curve: the seed piece is a punctured disc");
    }
  }

  // Condition 4: every shell component has complexity at least 6.
  for (size_t s = 0; s < plan.shells.size(); ++s) {
    const ShellComponent& sh = plan.shells[s];
    int kappa = surface::complexity(sh.signature);
    if (kappa < 6)
      reject(4,
             "shell " + std::to_string(sh.inner_level) + "." +
                 std::to_string(sh.component),
             "complexity " + std::to_string(kappa) + " < 6");
  }

  // Euler bookkeeping across consecutive pieces.
  for (size_t i = 0; i + 1 < plan.pieces.size(); ++i) {
    int chi = surface::euler_characteristic(plan.pieces[i].signature);
    int expected = surface::euler_characteristic(plan.pieces[i + 1].signature);
    int sum = chi;
    for (const auto& sh : plan.shells)
      if (sh.inner_level == static_cast<int>(i) + 1 && !sh.margin)
        sum += surface::euler_characteristic(sh.signature);
    if (sum != expected)
      reject(0, "S" + std::to_string(i + 2),
             "euler characteristic bookkeeping failed: " + std::to_string(sum) +
                 " != " + std::to_string(expected));
  }

  std::stable_sort(v.violations.begin(), v.violations.end(),
                   [](const auto& a, const auto& b) { return a.condition < b.condition; });
  return v;
}

BoundarySet boundaries(const ExhaustionPlan& plan) {
  auto verdict = verify_exhaustion(plan);
  if (!verdict.accepted)
    throw UnverifiedPlan("boundaries() requires a plan passing verify_exhaustion");
  BoundarySet out;
  for (size_t i = 0; i < plan.b_sets.size(); ++i) {
    std::vector<std::string> ids = plan.b_sets[i];
    std::sort(ids.begin(), ids.end());
    for (auto& id : ids) out.curves.push_back({static_cast<int>(i) + 1, id});
  }
  return out;
}

Mutation choose_mutation(const ExhaustionPlan& plan, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Mutation> options;
  for (size_t s = 0; s < plan.shells.size(); ++s) {
    const auto& sh = plan.shells[s];
    if (!sh.margin && sh.signature.genus >= 1)
      options.push_back({MutationKind::LowerShellComplexity, static_cast<int>(s), ""});
    if (!sh.margin && sh.signature.genus == 0 && sh.inner_level == plan.depth - 1)
      options.push_back({MutationKind::LowerShellComplexity, static_cast<int>(s), ""});
  }
  if (!plan.b_sets.empty())
    for (const auto& id : plan.b_sets.back()) {
      options.push_back({MutationKind::CapInterfaceDisk, -1, id});
      options.push_back({MutationKind::CapInterfacePuncture, -1, id});
    }
  if (options.empty()) throw InvalidConfig("plan admits no mutation");
  return options[rng() % options.size()];
}

ExhaustionPlan apply_mutation(const ExhaustionPlan& plan, const Mutation& m) {
  ExhaustionPlan out = plan;
  switch (m.kind) {
    case MutationKind::LowerShellComplexity: {
      ShellComponent& sh = out.shells.at(m.shell);
      if (sh.signature.genus >= 1) {
        sh.signature.genus = 0; // (3,0,2) -> kappa -1, (3,0,3) -> kappa 0
      } else {
        // Planar shell: trade four outer circles for two punctures,
        // dropping kappa from 6 to 4. The dropped curves and their margin
        // shells disappear.
        std::vector<std::string> dropped(sh.outer_interface.end() - 4,
                                         sh.outer_interface.end());
        sh.outer_interface.resize(sh.outer_interface.size() - 4);
        sh.signature = {0, 2, 1 + static_cast<int>(sh.outer_interface.size())};
        sh.q_labels = sh.inner_interface;
        for (const auto& id : sh.outer_interface) sh.q_labels.push_back(id);
        std::set<std::string> drop(dropped.begin(), dropped.end());
        std::vector<ShellComponent> kept;
        std::vector<int> remap(out.shells.size(), -1);
        for (size_t s = 0; s < out.shells.size(); ++s) {
          const auto& cand = out.shells[s];
          bool inner_dropped = cand.inner_interface.size() == 1 &&
                               drop.count(cand.inner_interface[0]) > 0;
          if (inner_dropped) continue;
          remap[s] = static_cast<int>(kept.size());
          kept.push_back(cand);
        }
        out.shells = std::move(kept);
        std::vector<std::pair<std::string, Continuation>> conts;
        for (auto& [id, c] : out.continuations) {
          if (drop.count(id)) continue;
          Continuation nc = c;
          if (nc.kind == Continuation::Kind::Shell) nc.shell = remap[nc.shell];
          conts.push_back({id, nc});
        }
        out.continuations = std::move(conts);
        for (auto& bs : out.b_sets) {
          bs.erase(std::remove_if(bs.begin(), bs.end(),
                                  [&](const std::string& id) { return drop.count(id) > 0; }),
                   bs.end());
        }
        for (auto& piece : out.pieces) {
          auto& labels = piece.attached_boundary_labels;
          size_t before = labels.size();
          labels.erase(std::remove_if(labels.begin(), labels.end(),
                                      [&](const std::string& id) { return drop.count(id) > 0; }),
                       labels.end());
          piece.signature.boundary -= static_cast<int>(before - labels.size());
          piece.signature.punctures += before != labels.size() ? 2 : 0;
        }
      }
      // Recompute cumulative genus so only condition 4 fires.
      for (size_t i = 1; i < out.pieces.size(); ++i) {
        int genus = out.pieces[0].signature.genus;
        for (const auto& sh2 : out.shells)
          if (sh2.inner_level <= static_cast<int>(i) && !sh2.margin)
            genus += sh2.signature.genus;
        out.pieces[i].signature.genus = genus;
      }
      break;
    }
    case MutationKind::CapInterfaceDisk:
    case MutationKind::CapInterfacePuncture: {
      Continuation::Kind kind = m.kind == MutationKind::CapInterfaceDisk
                                    ? Continuation::Kind::DiskCap
                                    : Continuation::Kind::PunctureCap;
      bool found = false;
      for (auto& [id, c] : out.continuations) {
        if (id != m.curve) continue;
        found = true;
        if (c.kind == Continuation::Kind::Shell && c.shell >= 0) {
          // Remove the shell that used to continue the curve.
          int target = c.shell;
          std::vector<ShellComponent> kept;
          std::vector<int> remap(out.shells.size(), -1);
          for (size_t s = 0; s < out.shells.size(); ++s) {
            if (static_cast<int>(s) == target) continue;
            remap[s] = static_cast<int>(kept.size());
            kept.push_back(out.shells[s]);
          }
          out.shells = std::move(kept);
          for (auto& [id2, c2] : out.continuations)
            if (c2.kind == Continuation::Kind::Shell && c2.shell >= 0)
              c2.shell = remap[c2.shell];
        }
        c = {kind, -1};
      }
      if (!found) throw InvalidConfig("mutation targets an unknown curve: " + m.curve);
      break;
    }
  }
  return out;
}

} // namespace alexsys::exhaust
