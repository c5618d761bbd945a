#pragma once

#include <string>

#include "helgason/catalog.hpp"

namespace testing_support {

using helgason::PairSpec;
using helgason::Scalar;
using helgason::Weight;

inline Scalar q(std::int64_t p, std::int64_t d = 1) { return Scalar(p, d); }

inline PairSpec spec(const std::string& family) {
  PairSpec p;
  p.family = family;
  return p;
}

inline PairSpec bc(Scalar k, int r, int s, int n = 1, bool shorts = true) {
  PairSpec p = spec(shorts ? "bc" : "c");
  p.deformation = k;
  p.r = r;
  p.s = s;
  p.n = n;
  return p;
}

inline PairSpec d21a(Scalar a) {
  PairSpec p = spec("d21a");
  p.deformation = a;
  return p;
}

}  // namespace testing_support
