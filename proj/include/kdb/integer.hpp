#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace kdb {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Counting binomial: C(n, k) for n >= k >= 0, zero otherwise.
inline Integer choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// Polynomial binomial t(t-1)...(t-k+1)/k! for any integer t, k >= 0.
inline Integer choose_poly(const Integer& t, std::int64_t k) {
  if (k < 0) return 0;
  Integer result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= t - i;
    result /= i + 1;
  }
  return result;
}

inline std::optional<std::int64_t> to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(x);
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace kdb
