#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "helgason/root_system.hpp"

namespace helgason {

struct BaseEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Weight root;  // simple root of the source node that was reflected
  RootClass root_class = RootClass::Regular;

  friend bool operator==(const BaseEdge&, const BaseEdge&) = default;
};

struct BaseGraph {
  std::vector<Base> nodes;  // nodes[0] is the seed
  std::vector<BaseEdge> edges;

  std::optional<std::size_t> find(const Base& base) const;
  // Every node reachable from the seed ignoring edge direction.
  bool connected() const;
  // Partition of node indices into singular-reflection classes, ordered by smallest member.
  std::vector<std::vector<std::size_t>> singular_classes() const;

  friend bool operator==(const BaseGraph&, const BaseGraph&) = default;
};

// Breadth-first closure of the seed under reflect_base.
BaseGraph enumerate_bases(const RestrictedRootSystem& system, const Base& seed, bool singular_only = false);

struct ClassMember {
  Base base;
  std::vector<Weight> path;  // singular simple roots reflected in, starting from the seed
};

std::vector<ClassMember> equivalence_class(const Base& base, const RestrictedRootSystem& system);

struct Exposure {
  Base base;
  std::vector<Weight> path;
  Weight exposed;  // gamma or gamma/2, whichever is simple in base
};

// The member of the class reached first by breadth-first search in which gamma or gamma/2 is simple.
Exposure find_base_exposing(const std::vector<ClassMember>& members, const Weight& gamma);
Exposure find_base_exposing(const Base& base, const Weight& gamma, const RestrictedRootSystem& system);

// Every shortest singular path exposing gamma, in lexicographic order of root sequences; at most cap.
std::vector<Exposure> all_minimal_exposing_paths(const Base& base, const Weight& gamma,
                                                 const RestrictedRootSystem& system, std::size_t cap = 64);

std::optional<Weight> exposed_simple(const Base& base, const Weight& gamma);

}  // namespace helgason
