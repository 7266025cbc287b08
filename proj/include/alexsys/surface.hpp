#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace alexsys::surface {

// Finite-type surface signature (genus g, punctures n, boundary components b).
struct FiniteTypeSignature {
  int genus = 0;
  int punctures = 0;
  int boundary = 0;

  bool operator==(const FiniteTypeSignature&) const = default;
  std::string str() const;
};

// kappa(S) = 3g - 3 + n + b. Total; may be negative for degenerate signatures.
int complexity(const FiniteTypeSignature& sig);

// chi(S) = 2 - 2g - n - b.
int euler_characteristic(const FiniteTypeSignature& sig);

// Signature of the surface obtained by gluing a and b along k pairs of
// boundary circles (one circle from each side per pair, k >= 1). Gluing two
// connected surfaces along k circles creates k-1 handles.
FiniteTypeSignature glue_signatures(const FiniteTypeSignature& a,
                                    const FiniteTypeSignature& b, int k);

// Rooted finite description of the end space. Leaves are flagged planar or
// genus-carrying; `cantor` nodes are self-similar binary refinements and so
// describe ends to arbitrary depth.
struct EndTree {
  enum class Kind { LeafPlanar, LeafGenus, CantorPlanar, CantorGenus, Node };

  Kind kind = Kind::LeafPlanar;
  std::vector<EndTree> children; // Node only

  static EndTree leaf_planar() { return {Kind::LeafPlanar, {}}; }
  static EndTree leaf_genus() { return {Kind::LeafGenus, {}}; }
  static EndTree cantor_planar() { return {Kind::CantorPlanar, {}}; }
  static EndTree cantor_genus() { return {Kind::CantorGenus, {}}; }
  static EndTree node(std::vector<EndTree> ch) { return {Kind::Node, std::move(ch)}; }

  bool operator==(const EndTree&) const = default;

  bool has_genus_end() const;
  // True when the described end space is infinite (contains a Cantor part)
  // or any end carries genus; a finite all-planar tree is a puncture set.
  bool infinite_end_space() const;
  int planar_leaf_count() const;
  std::string str() const;
};

inline constexpr int kInfiniteGenus = -1;

// Finite encoding of a possibly infinite-type surface.
struct SurfaceDescriptor {
  int total_genus = 0; // kInfiniteGenus for infinite genus
  std::optional<EndTree> ends;
  int boundary = 0;

  bool operator==(const SurfaceDescriptor&) const = default;

  bool infinite_genus() const { return total_genus == kInfiniteGenus; }
  bool infinite_type() const;
  std::string str() const;
};

// Structured validation verdict. Rejection is a value, not an error.
struct DescriptorVerdict {
  bool accepted = true;
  std::string violated_clause; // set on rejection
};

DescriptorVerdict validate_descriptor(const SurfaceDescriptor& desc);

} // namespace alexsys::surface
