#pragma once

#include <kdb/dim_value.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace kdb {

enum class Status { Yes, No, Unknown };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Yes: return "Yes";
    case Status::No: return "No";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

enum class Notion { PreDuBois, DuBois, PreRational, Rational };

inline constexpr Notion kAllNotions[] = {Notion::PreDuBois, Notion::DuBois, Notion::PreRational, Notion::Rational};

constexpr std::string_view to_string(Notion n) {
  switch (n) {
    case Notion::PreDuBois: return "pre_k_du_bois";
    case Notion::DuBois: return "k_du_bois";
    case Notion::PreRational: return "pre_k_rational";
    case Notion::Rational: return "k_rational";
  }
  return "?";
}

/// A single cohomology group h^i(X, Omega^p (x) L^m) cited as evidence.
struct CohomologyWitness {
  int p = 0;
  int i = 0;
  long long m = 0;
  DimValue value = DimValue::zero();

  friend bool operator==(const CohomologyWitness&, const CohomologyWitness&) = default;
};

/// No carries a witness or a textual certificate; Unknown carries the first
/// undecided obstruction.
struct Verdict {
  Status status = Status::Yes;
  std::optional<CohomologyWitness> witness;
  std::string note;

  static Verdict yes(std::string note = {}) { return {Status::Yes, std::nullopt, std::move(note)}; }
  static Verdict no(std::string note, std::optional<CohomologyWitness> w = std::nullopt) {
    return {Status::No, std::move(w), std::move(note)};
  }
  static Verdict unknown(std::string note, std::optional<CohomologyWitness> w = std::nullopt) {
    return {Status::Unknown, std::move(w), std::move(note)};
  }

  bool is_yes() const { return status == Status::Yes; }
  bool is_no() const { return status == Status::No; }
  bool is_unknown() const { return status == Status::Unknown; }
};

}  // namespace kdb
