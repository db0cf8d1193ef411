#pragma once

// Three-valued cohomology dimensions. A chase that pins a dimension yields
// Exact(n); one that only bounds a kernel or cokernel yields Bounded(lo, hi).

#include <kdb/integer.hpp>

#include <optional>
#include <ostream>
#include <string>

namespace kdb {

enum class Vanishing { Zero, Nonzero, Unknown };

class DimValue {
 public:
  static DimValue exact(Integer n) { return DimValue(std::move(n)); }
  static DimValue zero() { return DimValue(Integer(0)); }
  /// hi = nullopt means unbounded above.
  static DimValue bounded(Integer lo, std::optional<Integer> hi) {
    if (hi && *hi == lo) return exact(std::move(lo));
    DimValue d(std::move(lo));
    d.hi_ = std::move(hi);
    d.exact_ = false;
    return d;
  }

  bool is_exact() const noexcept { return exact_; }
  const Integer& lo() const noexcept { return lo_; }
  /// Upper bound; equals lo() when exact, nullopt when unbounded.
  std::optional<Integer> hi() const { return exact_ ? std::optional<Integer>(lo_) : hi_; }
  /// Only valid when is_exact().
  const Integer& value() const noexcept { return lo_; }

  Vanishing vanishing() const {
    if (exact_) return lo_ == 0 ? Vanishing::Zero : Vanishing::Nonzero;
    return lo_ >= 1 ? Vanishing::Nonzero : Vanishing::Unknown;
  }
  bool is_zero() const { return vanishing() == Vanishing::Zero; }
  bool is_nonzero() const { return vanishing() == Vanishing::Nonzero; }

  /// Interval sum; exact when both summands are.
  friend DimValue operator+(const DimValue& a, const DimValue& b) {
    if (a.exact_ && b.exact_) return exact(a.lo_ + b.lo_);
    auto ah = a.hi(), bh = b.hi();
    std::optional<Integer> hi;
    if (ah && bh) hi = *ah + *bh;
    return bounded(a.lo_ + b.lo_, hi);
  }

  friend bool operator==(const DimValue& a, const DimValue& b) {
    return a.exact_ == b.exact_ && a.lo_ == b.lo_ && a.hi() == b.hi();
  }

  std::string str() const {
    if (exact_) return lo_.str();
    auto h = hi();
    return lo_.str() + ".." + (h ? h->str() : std::string("inf"));
  }

  friend std::ostream& operator<<(std::ostream& os, const DimValue& d) { return os << d.str(); }

 private:
  explicit DimValue(Integer n) : lo_(std::move(n)) {}

  Integer lo_;
  std::optional<Integer> hi_;
  bool exact_ = true;
};

}  // namespace kdb
