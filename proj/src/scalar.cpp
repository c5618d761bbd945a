#include "helgason/scalar.hpp"

#include <charconv>

#include "helgason/error.hpp"

namespace helgason {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IsotropicRoot: return "IsotropicRoot";
    case ErrorKind::UnknownRoot: return "UnknownRoot";
    case ErrorKind::SingularRoot: return "SingularRoot";
    case ErrorKind::NotLinearlyIndependent: return "NotLinearlyIndependent";
    case ErrorKind::SpanViolation: return "SpanViolation";
    case ErrorKind::UnclassifiablePattern: return "UnclassifiablePattern";
    case ErrorKind::InvalidSystem: return "InvalidSystem";
    case ErrorKind::ParameterViolation: return "ParameterViolation";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::RegularRootNotTransportable: return "RegularRootNotTransportable";
    case ErrorKind::NotCritical: return "NotCritical";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::NotFullyReflectable: return "NotFullyReflectable";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Precondition: return "Precondition";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const std::string_view whole = trim(text);
  const auto slash = whole.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_int(whole, whole));
  const std::int64_t num = parse_int(trim(whole.substr(0, slash)), whole);
  const std::int64_t den = parse_int(trim(whole.substr(slash + 1)), whole);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(whole) + "'");
  return Scalar(num, den);
}

std::string format_scalar(const Scalar& s) {
  if (s.denominator() == 1) return std::to_string(s.numerator());
  return std::to_string(s.numerator()) + "/" + std::to_string(s.denominator());
}

bool in_scaled_even_nonneg(const Scalar& s, int scale_exp) {
  if (!is_integer(s) || s < 0) return false;
  const std::int64_t modulus = std::int64_t{2} << scale_exp;
  return s.numerator() % modulus == 0;
}

}  // namespace helgason
