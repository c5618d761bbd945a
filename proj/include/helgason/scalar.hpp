#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/int operator== recurses forever under C++20's
// reversed-operator rules; a non-template overload wins resolution instead.
namespace boost {
inline constexpr bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

namespace helgason {

// Exact rational; boost keeps it in lowest terms with a positive denominator.
using Scalar = boost::rational<std::int64_t>;

Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& s);

inline bool is_integer(const Scalar& s) { return s.denominator() == 1; }

// s in 2^scale_exp * 2Z>=0, i.e. s is a nonnegative integer divisible by 2^(scale_exp+1).
bool in_scaled_even_nonneg(const Scalar& s, int scale_exp);

inline bool in_even_nonneg(const Scalar& s) { return in_scaled_even_nonneg(s, 0); }

inline bool is_nonneg_integer(const Scalar& s) { return is_integer(s) && s >= 0; }

}  // namespace helgason
