#include "alexsys/surface.hpp"

namespace alexsys::surface {

std::string FiniteTypeSignature::str() const {
  return "(g=" + std::to_string(genus) + ",n=" + std::to_string(punctures) +
         ",b=" + std::to_string(boundary) + ")";
}

int complexity(const FiniteTypeSignature& sig) {
  return 3 * sig.genus - 3 + sig.punctures + sig.boundary;
}

int euler_characteristic(const FiniteTypeSignature& sig) {
  return 2 - 2 * sig.genus - sig.punctures - sig.boundary;
}

FiniteTypeSignature glue_signatures(const FiniteTypeSignature& a,
                                    const FiniteTypeSignature& b, int k) {
  // chi adds under circle gluing; matching chi = 2-2g-n-b forces the genus.
  FiniteTypeSignature out;
  out.punctures = a.punctures + b.punctures;
  out.boundary = a.boundary + b.boundary - 2 * k;
  int chi = euler_characteristic(a) + euler_characteristic(b);
  out.genus = (2 - chi - out.punctures - out.boundary) / 2;
  return out;
}

bool EndTree::has_genus_end() const {
  switch (kind) {
    case Kind::LeafGenus:
    case Kind::CantorGenus:
      return true;
    case Kind::LeafPlanar:
    case Kind::CantorPlanar:
      return false;
    case Kind::Node:
      for (const auto& c : children)
        if (c.has_genus_end()) return true;
      return false;
  }
  return false;
}

bool EndTree::infinite_end_space() const {
  switch (kind) {
    case Kind::CantorPlanar:
    case Kind::CantorGenus:
    case Kind::LeafGenus: // a genus end is an end of the surface
      return true;
    case Kind::LeafPlanar:
      return false;
    case Kind::Node:
      for (const auto& c : children)
        if (c.infinite_end_space()) return true;
      return false;
  }
  return false;
}

int EndTree::planar_leaf_count() const {
  switch (kind) {
    case Kind::LeafPlanar:
      return 1;
    case Kind::Node: {
      int n = 0;
      for (const auto& c : children) n += c.planar_leaf_count();
      return n;
    }
    default:
      return 0;
  }
}

std::string EndTree::str() const {
  switch (kind) {
    case Kind::LeafPlanar:
      return "leaf(planar)";
    case Kind::LeafGenus:
      return "leaf(genus)";
    case Kind::CantorPlanar:
      return "cantor(planar)";
    case Kind::CantorGenus:
      return "cantor(genus)";
    case Kind::Node: {
      std::string s = "node(";
      for (size_t i = 0; i < children.size(); ++i) {
        if (i) s += ",";
        s += children[i].str();
      }
      return s + ")";
    }
  }
  return "?";
}

bool SurfaceDescriptor::infinite_type() const {
  if (infinite_genus()) return true;
  return ends && ends->infinite_end_space();
}

std::string SurfaceDescriptor::str() const {
  std::string s = "genus=";
  s += infinite_genus() ? "infinity" : std::to_string(total_genus);
  s += "; ends=" + (ends ? ends->str() : std::string("none"));
  s += "; boundary=" + std::to_string(boundary) + ";";
  return s;
}

DescriptorVerdict validate_descriptor(const SurfaceDescriptor& desc) {
  if (!desc.infinite_genus() && desc.total_genus < 0)
    return {false, "total genus must be non-negative or infinity"};
  if (desc.boundary < 0) return {false, "boundary count must be non-negative"};
  if (desc.infinite_genus()) {
    if (!desc.ends || !desc.ends->has_genus_end())
      return {false, "infinite genus must accumulate at an end"};
  }
  return {true, {}};
}

} // namespace alexsys::surface
