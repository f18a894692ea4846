#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace distlat {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

struct ExtendedGcd {
  Integer gcd;  // always >= 0
  Integer s;
  Integer t;    // gcd == s*a + t*b
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Rounds toward negative infinity; divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
// Result lies in [0, |b|).
Integer floor_mod(const Integer& a, const Integer& b);

bool divides(const Integer& d, const Integer& a);

// Accepts an optional sign followed by decimal digits only.
Integer parse_integer(std::string_view text);
std::string to_string(const Integer& value);

IntVector zero_vector(std::size_t n);
bool is_zero(const IntVector& v);

}  // namespace distlat
