#pragma once

// Catalogued smooth projective bases (X, L) and exact dimensions of
// H^q(X, Omega^p_X (x) L^m).
//
// Two families are supported:
//   * (P^r, O(d)), via Bott's formula;
//   * a smooth surface X of degree d in P^3 with L = O_X(l), via the
//     restricted Euler sequence and the conormal sequence.

#include <kdb/dim_value.hpp>
#include <kdb/error.hpp>
#include <kdb/integer.hpp>
#include <kdb/verdict.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace kdb {

/// dim H^q(P^n, Omega^p(m)).
inline Integer bott(std::int64_t n, std::int64_t p, std::int64_t q, std::int64_t m) {
  if (p < 0 || q < 0 || p > n || q > n) return 0;
  if (q == 0 && m > p) return choose(m + n - p, m) * choose(m - 1, p);
  if (q == p && m == 0) return 1;
  if (q == n && m < p - n) return choose(-m + p, -m) * choose(-m - 1, n - p);
  return 0;
}

/// chi(P^n, Omega^p(m)) from the exterior powers of the Euler sequence:
/// chi(Omega^p(m)) = C(n+1, p) chi(O(m-p)) - chi(Omega^{p-1}(m)), with
/// chi(O(t)) the Hilbert polynomial C(t+n, n).
inline Integer euler_char_omega(std::int64_t n, std::int64_t p, std::int64_t m) {
  auto chi_line = [n](std::int64_t t) { return choose_poly(Integer(t + n), n); };
  Integer chi = chi_line(m);
  for (std::int64_t j = 1; j <= p; ++j) chi = choose(n + 1, j) * chi_line(m - j) - chi;
  return chi;
}

enum class ModelFamily { ProjectiveSpace, HypersurfaceSurface };

enum class Tri { Yes, No, Unknown };

/// Immutable description of (X, L) with an exact cohomology oracle.
class CohomologyModel {
 public:
  ModelFamily family() const noexcept { return family_; }
  int base_dim() const noexcept { return base_dim_; }
  /// r for projective space, the degree for the surface.
  std::int64_t first_param() const noexcept { return a_; }
  /// d for projective space, the twist l for the surface.
  std::int64_t second_param() const noexcept { return b_; }
  bool bott_vanishing_certificate() const noexcept { return family_ == ModelFamily::ProjectiveSpace; }
  const std::string& description() const noexcept { return description_; }

  /// True exactly when (X, L) = (P^n, O(1)), whose cone is affine space.
  bool is_projective_space_hyperplane() const noexcept {
    if (family_ == ModelFamily::ProjectiveSpace) return b_ == 1;
    return a_ == 1 && b_ == 1;
  }

  /// dim H^q(X, Omega^p (x) L^m).
  DimValue hdim(int p, int q, std::int64_t m) const {
    if (p < 0 || q < 0 || p > base_dim_ || q > base_dim_) return DimValue::zero();
    if (family_ == ModelFamily::ProjectiveSpace) return DimValue::exact(bott(a_, p, q, m * b_));
    return surface_hdim(p, q, m * b_);
  }

  /// Smallest m0 >= 1 with hdim(p, i, m) = 0 for every p, every i >= 1 and
  /// every m >= m0.
  std::int64_t vanishing_from() const {
    if (family_ == ModelFamily::ProjectiveSpace) return 1;
    // Twists j >= max(1, 2d-3) kill every higher group of O, Omega^1, Omega^2.
    const std::int64_t j0 = std::max<std::int64_t>(1, 2 * a_ - 3);
    return std::max<std::int64_t>(1, (j0 + b_ - 1) / b_);
  }

  /// Whether cupping with c1(L) gives isomorphisms
  /// H^0(O) -> H^1(Omega^1) -> ... -> H^k(Omega^k). Certified only for
  /// projective space (powers of the hyperplane class); refuted whenever a
  /// dimension in the chain differs from 1.
  Tri cup_chain(int k) const {
    for (int j = 0; j <= k; ++j) {
      DimValue h = hdim(j, j, 0);
      if (h.is_exact()) {
        if (h.value() != 1) return Tri::No;
        continue;
      }
      auto hi = h.hi();
      if (h.lo() > 1 || (hi && *hi < 1)) return Tri::No;
      return Tri::Unknown;
    }
    if (k == 0) return Tri::Yes;
    const bool hyperplane_powers =
        family_ == ModelFamily::ProjectiveSpace || (family_ == ModelFamily::HypersurfaceSurface && a_ == 1);
    return hyperplane_powers ? Tri::Yes : Tri::Unknown;
  }

  friend CohomologyModel veronese_model(std::int64_t r, std::int64_t d);
  friend CohomologyModel hypersurface_surface_model(std::int64_t d, std::int64_t l);

 private:
  CohomologyModel(ModelFamily f, int dim, std::int64_t a, std::int64_t b, std::string desc)
      : family_(f), base_dim_(dim), a_(a), b_(b), description_(std::move(desc)) {}

  // --- surface of degree d = a_ in P^3, twist j ---

  /// h^0(P^3, O(t)).
  static Integer h0_p3(std::int64_t t) { return t >= 0 ? choose(t + 3, 3) : Integer(0); }

  /// h^q(O_X(j)). The ideal sequence 0 -> O(j-d) -> O(j) -> O_X(j) -> 0 and
  /// H^1 = H^2 = 0 for line bundles on P^3 give h^0 and h^1 = 0; h^2 is
  /// Serre dual to h^0 with omega_X = O_X(d-4).
  Integer h_line(int q, std::int64_t j) const {
    switch (q) {
      case 0: return h0_p3(j) - h0_p3(j - a_);
      case 1: return 0;
      case 2: return h_line(0, a_ - 4 - j);
      default: return 0;
    }
  }

  /// h^q(Omega_{P^3}|_X (j)) from the restricted Euler sequence
  /// 0 -> E(j) -> O_X(j-1)^4 -> O_X(j) -> 0.
  Integer h_euler(int q, std::int64_t j) const {
    switch (q) {
      case 0:
        // For j >= 1 the multiplication map onto H^0(O_X(j)) is surjective
        // (X is projectively normal and the map is onto on P^3).
        if (j >= 1) return 4 * h_line(0, j - 1) - h_line(0, j);
        return 0;
      case 1:
        // Cokernel of the same multiplication map; only H^0(O_X) survives.
        return j == 0 ? 1 : 0;
      case 2:
        // H^1(O_X(j)) = 0 and H^3 = 0 make the H^2 row short exact.
        return 4 * h_line(2, j - 1) - h_line(2, j);
      default:
        return 0;
    }
  }

  /// h^q(Omega^1_X(j)) from 0 -> O_X(j-d) -> E(j) -> Omega^1_X(j) -> 0:
  ///   h^0 = h^0(E) - h^0(O_X(j-d))          (H^1(O_X(j-d)) = 0)
  ///   h^1 = h^1(E) + dim ker(g)
  ///   h^2 = h^2(E) - rank(g)
  /// for the connecting map g: H^2(O_X(j-d)) -> H^2(E(j)).
  DimValue omega1(int q, std::int64_t j) const {
    if (q == 0) return DimValue::exact(h_euler(0, j) - h_line(0, j - a_));
    // Kodaira-Akizuki-Nakano: H^2(Omega^1_X (x) A) = 0 for A ample.
    if (q == 2 && j >= 1) return DimValue::zero();

    const Integer src = h_line(2, j - a_);
    const Integer dst = h_euler(2, j);
    Integer rank_lo = 0, rank_hi = std::min(src, dst);
    if (src == 0 || dst == 0) {
      rank_hi = 0;
    } else if (j == 0) {
      // Hodge symmetry: h^{1,2} = h^{2,1} = h^1(O_X(d-4)) = 0, so g is onto.
      rank_lo = rank_hi = dst;
    }
    if (q == 1) {
      const Integer base = h_euler(1, j);
      return DimValue::bounded(base + src - rank_hi, base + src - rank_lo);
    }
    return DimValue::bounded(dst - rank_hi, dst - rank_lo);
  }

  DimValue surface_hdim(int p, int q, std::int64_t j) const {
    switch (p) {
      case 0: return DimValue::exact(h_line(q, j));
      case 1: return omega1(q, j);
      case 2: return DimValue::exact(h_line(q, j + a_ - 4));  // Omega^2_X = O_X(d-4)
      default: return DimValue::zero();
    }
  }

  ModelFamily family_;
  int base_dim_;
  std::int64_t a_;
  std::int64_t b_;
  std::string description_;
};

/// (P^r, O(d)); its cone is the Veronese cone.
inline CohomologyModel veronese_model(std::int64_t r, std::int64_t d) {
  if (r < 1 || d < 1) throw Error(ErrorCode::InvalidModel, "projective space needs r >= 1 and d >= 1");
  if (r > 64) throw Error(ErrorCode::InvalidModel, "r too large");
  return CohomologyModel(ModelFamily::ProjectiveSpace, static_cast<int>(r), r, d,
                         "P^" + std::to_string(r) + " with O(" + std::to_string(d) + ")");
}

/// Smooth surface of degree d in P^3 with L = O_X(l).
inline CohomologyModel hypersurface_surface_model(std::int64_t d, std::int64_t l) {
  if (d <= 0 || l <= 0) throw Error(ErrorCode::InvalidModel, "surface needs degree >= 1 and twist >= 1");
  return CohomologyModel(ModelFamily::HypersurfaceSurface, 2, d, l,
                         "degree-" + std::to_string(d) + " surface in P^3 with O_X(" + std::to_string(l) + ")");
}

/// Graded piece m of the section ring, h^0(X, L^m).
inline Integer hilbert_function(const CohomologyModel& model, std::int64_t m) {
  if (m < 0) throw Error(ErrorCode::OutOfRange, "hilbert_function needs m >= 0");
  DimValue h = model.hdim(0, 0, m);
  if (!h.is_exact()) throw Error(ErrorCode::InexactHilbert, "h^0(L^" + std::to_string(m) + ") is only bounded");
  return h.value();
}

class HodgeDiamond {
 public:
  explicit HodgeDiamond(int n) : n_(n), entries_((n + 1) * (n + 1), DimValue::zero()) {}

  int dim() const noexcept { return n_; }
  const DimValue& at(int p, int q) const { return entries_[p * (n_ + 1) + q]; }
  DimValue& at(int p, int q) { return entries_[p * (n_ + 1) + q]; }

  /// h^{p,q} = h^{q,p} = h^{n-p,n-q} wherever the entries involved are exact.
  bool symmetric() const {
    for (int p = 0; p <= n_; ++p)
      for (int q = 0; q <= n_; ++q) {
        const auto& a = at(p, q);
        const auto& b = at(q, p);
        const auto& c = at(n_ - p, n_ - q);
        if (a.is_exact() && b.is_exact() && a.value() != b.value()) return false;
        if (a.is_exact() && c.is_exact() && a.value() != c.value()) return false;
      }
    return true;
  }

 private:
  int n_;
  std::vector<DimValue> entries_;
};

inline HodgeDiamond hodge_diamond(const CohomologyModel& model) {
  HodgeDiamond h(model.base_dim());
  for (int p = 0; p <= model.base_dim(); ++p)
    for (int q = 0; q <= model.base_dim(); ++q) h.at(p, q) = model.hdim(p, q, 0);
  return h;
}

}  // namespace kdb
