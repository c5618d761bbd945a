#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "helgason/basegraph.hpp"
#include "helgason/catalog.hpp"
#include "helgason/sphericity.hpp"

namespace helgason {

inline constexpr const char* kVersion = "0.3.0";

using Json = nlohmann::ordered_json;

// "2,0,-1/2" or "(2,0,-1/2)".
Weight parse_weight(std::string_view text);
// "(1,-1,0),(0,1,-1)"; tuples may also be separated by ';'.
std::vector<Weight> parse_tuples(std::string_view text);

struct VerdictDocument {
  std::string pair;
  std::vector<Weight> base;
  Weight weight;
  SphericityVerdict verdict;
  std::string version = kVersion;

  friend bool operator==(const VerdictDocument&, const VerdictDocument&) = default;
};

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Weight root;
  bool singular = false;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct GraphClass {
  std::vector<std::size_t> members;
  std::vector<Weight> principal;  // shared by every member

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

struct GraphDocument {
  std::string pair;
  bool singular_only = false;
  std::vector<std::vector<Weight>> nodes;
  std::vector<GraphEdge> edges;
  std::vector<GraphClass> classes;
  bool connected = false;
  bool principal_constant = false;  // every class has one principal set
  std::string version = kVersion;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

Json to_json(const Scalar& s);
Json to_json(const Weight& w);
Json to_json(const Base& b);
Json to_json(const WeightTransportOutcome& o);
Json to_json(const ReflectionStep& s);
Json to_json(const PrincipalRootCheck& c);
Json to_json(const SphericityVerdict& v);
Json to_json(const VerdictDocument& d);
Json to_json(const GraphDocument& g);

Scalar scalar_from_json(const Json& j);
Weight weight_from_json(const Json& j);
Base base_from_json(const Json& j);
WeightTransportOutcome transport_from_json(const Json& j);
ReflectionStep step_from_json(const Json& j);
PrincipalRootCheck check_from_json(const Json& j);
SphericityVerdict verdict_from_json(const Json& j);
VerdictDocument verdict_document_from_json(const Json& j);
GraphDocument graph_document_from_json(const Json& j);

VerdictDocument make_verdict_document(const std::string& pair, const Base& base, const Weight& weight,
                                      SphericityVerdict verdict);
GraphDocument make_graph_document(const std::string& pair, const RestrictedRootSystem& system, const Base& seed,
                                  bool singular_only);
std::string to_dot(const GraphDocument& g);

// Roots, multiplicities, default base and principal roots of a catalog entry.
Json describe_entry(const CatalogEntry& entry);
Json describe_family(const FamilyInfo& info);

}  // namespace helgason
