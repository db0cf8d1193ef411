#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace kdb {

/// A nonnegative count or infinity.
class ExtCount {
 public:
  constexpr ExtCount() = default;
  constexpr explicit ExtCount(std::int64_t v) : value_(v) {}

  static constexpr ExtCount infinity() {
    ExtCount c;
    c.value_ = kInf;
    return c;
  }

  constexpr bool is_infinite() const noexcept { return value_ == kInf; }
  constexpr std::int64_t value() const noexcept { return value_; }

  friend constexpr auto operator<=>(const ExtCount&, const ExtCount&) = default;

  std::string str() const { return is_infinite() ? std::string("inf") : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, const ExtCount& c) { return os << c.str(); }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = 0;
};

}  // namespace kdb
