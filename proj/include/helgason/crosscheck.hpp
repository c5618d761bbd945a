#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "helgason/catalog.hpp"
#include "helgason/sphericity.hpp"

namespace helgason {

using Oracle = std::function<bool(const Weight&)>;

struct CrosscheckSample {
  Weight lambda;
  SphericityVerdict::Kind procedure = SphericityVerdict::Kind::Spherical;
  bool oracle = false;
};

struct CrosscheckReport {
  std::string pair;
  std::string variant;
  int max_coeff = 0;
  std::uint64_t total = 0;
  std::uint64_t agree_spherical = 0;
  std::uint64_t agree_not = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t undetermined = 0;
  // Lexicographically first offenders, at most max_samples of each kind.
  std::vector<CrosscheckSample> disagreement_samples;
  std::vector<CrosscheckSample> undetermined_samples;

  bool clean() const { return disagreements == 0 && undetermined == 0; }
};

// Every integral weight in [-max_coeff, max_coeff]^dim, split across threads
// (0 = hardware concurrency). Results do not depend on the thread count.
CrosscheckReport crosscheck(const SphericityPlan& plan, std::size_t dim, int max_coeff, const Oracle& oracle,
                            unsigned threads = 0, std::size_t max_samples = 16);

// Against closed_form(entry.spec, ., variant) on the entry's default base.
CrosscheckReport crosscheck(const CatalogEntry& entry, int max_coeff, const std::string& variant = "table",
                            unsigned threads = 0, std::size_t max_samples = 16);

// Spherical weights of the box, sorted lexicographically.
std::vector<Weight> enumerate_spherical(const SphericityPlan& plan, std::size_t dim, int max_coeff,
                                        unsigned threads = 0);

}  // namespace helgason
