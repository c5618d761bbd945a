#include "helgason/closedform.hpp"

namespace helgason {

namespace {

bool even_nonneg(const Scalar& s) { return in_even_nonneg(s); }

void arity(const PairSpec& p, const Weight& lambda, std::size_t expected) {
  if (lambda.dim() != expected)
    throw Error(ErrorKind::WrongArity, p.family + " expects " + std::to_string(expected) + " coefficients, got " +
                                           std::to_string(lambda.dim()));
}

// x_1 - x_2, ..., x_{k-1} - x_k in 2Z>=0 for the slice [from, from + k).
bool chain_even(const Weight& w, std::size_t from, std::size_t k) {
  for (std::size_t i = from; i + 1 < from + k; ++i)
    if (!even_nonneg(w[i] - w[i + 1])) return false;
  return true;
}

std::size_t nonzero_count(const Weight& w, std::size_t from, std::size_t k) {
  std::size_t c = 0;
  for (std::size_t i = from; i < from + k; ++i)
    if (w[i] != 0) ++c;
  return c;
}

// a_i - a_{i+1}, a_r, b_i - b_{i+1}, b_s in 2Z>=0 and (lead)_last/2 >= #{nonzero in other block}.
bool bc_row(const Weight& w, std::size_t a0, std::size_t r, std::size_t b0, std::size_t s, bool lead_is_a) {
  if (!chain_even(w, a0, r) || !chain_even(w, b0, s)) return false;
  if (r > 0 && !even_nonneg(w[a0 + r - 1])) return false;
  if (s > 0 && !even_nonneg(w[b0 + s - 1])) return false;
  if (lead_is_a) {
    const Scalar lead = r > 0 ? w[a0 + r - 1] : Scalar(0);
    return lead / Scalar(2) >= Scalar(static_cast<std::int64_t>(nonzero_count(w, b0, s)));
  }
  const Scalar lead = s > 0 ? w[b0 + s - 1] : Scalar(0);
  return lead / Scalar(2) >= Scalar(static_cast<std::int64_t>(nonzero_count(w, a0, r)));
}

}  // namespace

const char* to_string(BcCase c) {
  switch (c) {
    case BcCase::I: return "I";
    case BcCase::II: return "II";
    case BcCase::III: return "III";
  }
  return "?";
}

bool table2(const PairSpec& spec, const Weight& w, const std::string& variant) {
  const PairSpec p = with_defaults(spec);
  const std::string& f = p.family;
  if (f == "gl-osp") {
    arity(p, w, static_cast<std::size_t>(p.m + p.n));
    return chain_even(w, 0, p.m) && chain_even(w, p.m, p.n);
  }
  if (f == "gl-gl" || f == "osp-osp") {
    arity(p, w, static_cast<std::size_t>(p.r + p.s));
    return bc_row(w, 0, p.r, p.r, p.s, true);
  }
  if (f == "osp-gl") {
    arity(p, w, static_cast<std::size_t>(p.m + p.n));
    return bc_row(w, 0, p.m, p.m, p.n, false);
  }
  if (f == "osp2r-osp" || f == "osp2r4s") {
    const auto r = static_cast<std::size_t>(p.r), s = static_cast<std::size_t>(p.s);
    arity(p, w, r + s);
    if (!chain_even(w, 0, r) || !even_nonneg(w[r - 2] + w[r - 1])) return false;
    if (!chain_even(w, r, s)) return false;
    if (s > 0 && !even_nonneg(w[r + s - 1])) return false;
    if (f == "osp2r4s")
      return w[r + s - 1] / Scalar(2) >= Scalar(static_cast<std::int64_t>(nonzero_count(w, 0, r)));
    if (s > 0 && w[r + s - 1] / Scalar(2) < Scalar(static_cast<std::int64_t>(nonzero_count(w, 0, r - 1))))
      return false;
    if (w[r - 1] < 0 && w[r - 2] + w[r - 1] < Scalar(2 * p.n - 4 * p.s)) return false;
    return true;
  }
  if (f == "d21a") {
    arity(p, w, 2);
    return even_nonneg(w[0]) && even_nonneg(w[1]) && (w[0] != 0 || w[1] == 0);
  }
  if (f == "ab13-sl14") {
    arity(p, w, 2);
    return is_nonneg_integer(w[0]) && is_nonneg_integer(w[1]) && ((w[0] == 0 && w[1] == 0) || w[0] >= 2);
  }
  if (f == "ab13-gosp24") {
    arity(p, w, 3);
    return even_nonneg(w[0] - w[1]) && is_nonneg_integer(w[1]) && is_nonneg_integer(w[2]) &&
           ((w[0] == 0 && w[1] == 0 && w[2] == 0) || w[0] > w[1]);
  }
  if (f == "ab13-d212") {
    arity(p, w, 3);
    return chain_even(w, 0, 3) && is_nonneg_integer(w[2]) && (w[2] == 0 || w[0] > w[1]);
  }
  if (f == "ag12-d213") {
    arity(p, w, 2);
    if (variant == "item11") return even_nonneg(w[0] - w[1]) && even_nonneg(w[1]);
    if (variant != "table") throw Error(ErrorKind::Precondition, "unknown ag12-d213 variant '" + variant + "'");
    return even_nonneg(w[0]) && even_nonneg(w[1]);
  }
  throw Error(ErrorKind::UnknownFamily, f + " has no table row");
}

bool example_bc(BcCase c, int r, int s, const Weight& w) {
  if (r < 1 || s < 0) throw Error(ErrorKind::Precondition, "example cases need r >= 1");
  if (w.dim() != static_cast<std::size_t>(r + s))
    throw Error(ErrorKind::WrongArity, "expected " + std::to_string(r + s) + " coefficients");
  if (c == BcCase::III) {
    if (r != 1 || s != 1) throw Error(ErrorKind::Precondition, "case III needs r = s = 1");
    return even_nonneg(w[0]) && even_nonneg(w[1]) && (w[0] != 0 || w[1] == 0);
  }
  return bc_row(w, 0, static_cast<std::size_t>(r), static_cast<std::size_t>(r), static_cast<std::size_t>(s), true);
}

BcCase example_case_for(const PairSpec& spec) {
  const PairSpec p = with_defaults(spec);
  if (p.family != "bc" && p.family != "c") throw Error(ErrorKind::Precondition, p.family + " is not a generic family");
  const Scalar k = *p.deformation;
  if (k == -1) return BcCase::I;
  if (k == Scalar(-1, 2) && p.n == 1) return BcCase::II;
  if (p.r == 1 && p.s == 1 && p.n == 1) return BcCase::III;
  throw Error(ErrorKind::Precondition, "no example case covers k=" + format_scalar(k) + ", n=" + std::to_string(p.n));
}

bool closed_form(const PairSpec& spec, const Weight& lambda, const std::string& variant) {
  const PairSpec p = with_defaults(spec);
  if (p.family == "bc" || p.family == "c") return example_bc(example_case_for(p), p.r, p.s, lambda);
  return table2(p, lambda, variant);
}

}  // namespace helgason
