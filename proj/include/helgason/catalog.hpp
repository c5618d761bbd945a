#pragma once

#include <optional>
#include <string>
#include <vector>

#include "helgason/root_system.hpp"

namespace helgason {

// Parameters left at -1 (or nullopt) take the family default.
struct PairSpec {
  std::string family;
  int m = -1;
  int n = -1;
  int r = -1;
  int s = -1;
  std::optional<Scalar> deformation;
};

struct FamilyInfo {
  std::string id;
  std::string pair;         // the supersymmetric pair, or the generic system name
  std::string system;       // restricted root system type
  std::string parameters;   // accepted parameter flags
  std::string constraints;  // as printed with the pair
  std::string coordinates;  // meaning of the weight coordinates, in order
  bool generic = false;
};

struct CatalogEntry {
  PairSpec spec;  // with defaults filled in
  RestrictedRootSystem system;
  Base default_base;
  std::vector<Weight> expected_principal;
  std::string closed_form_id;
};

// Table order, then the two generic families.
const std::vector<FamilyInfo>& list_families();
const FamilyInfo& family_info(const std::string& id);

PairSpec with_defaults(PairSpec spec);
CatalogEntry build_pair(const PairSpec& spec);

// Orbit of seed under the group generated by reflections in the given
// non-isotropic roots.
std::vector<Weight> weyl_orbit(const Weight& seed, const std::vector<Weight>& reflecting, const Matrix& gram);
std::vector<Weight> weyl_orbit(const Weight& seed, const RestrictedRootSystem& system);

}  // namespace helgason
