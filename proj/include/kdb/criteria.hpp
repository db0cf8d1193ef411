#pragma once

// Singularity criteria for the affine cone Z = C(X, L) = Spec (+)_{m>=0} H^0(X, L^m)
// over a catalogued smooth projective base. Everything reduces to vanishing
// of h^i(X, Omega^p (x) L^m) plus the cup-product chain on H^j(Omega^j).
//
// Verdicts are three-valued: a dimension known only up to Bounded(0, .)
// yields Unknown, never a guess.

#include <kdb/cohomology.hpp>
#include <kdb/error.hpp>
#include <kdb/verdict.hpp>

#include <optional>
#include <string>
#include <vector>

namespace kdb {

struct ConeSpec {
  CohomologyModel model;
  int n;
  int total_dim;
  bool smooth_total_space;

  explicit ConeSpec(CohomologyModel m)
      : model(std::move(m)),
        n(model.base_dim()),
        total_dim(model.base_dim() + 1),
        smooth_total_space(model.is_projective_space_hyperplane()) {}
};

namespace detail {

/// Scans h^i(Omega^p (x) L^m) over p <= p_max, 1 <= i <= n and
/// m_lo <= m < vanishing_from() in lexicographic (p, i, m) order. Returns
/// No at the first certified nonzero group, else Unknown at the first
/// undecided one, else Yes.
template <class Skip>
Verdict scan_vanishing(const ConeSpec& spec, int p_max, std::int64_t m_lo, Skip skip) {
  const std::int64_t m_end = spec.model.vanishing_from();
  std::optional<CohomologyWitness> first_unknown;
  for (int p = 0; p <= p_max; ++p)
    for (int i = 1; i <= spec.n; ++i)
      for (std::int64_t m = m_lo; m < m_end; ++m) {
        if (skip(p, i, m)) continue;
        DimValue h = spec.model.hdim(p, i, m);
        switch (h.vanishing()) {
          case Vanishing::Zero: break;
          case Vanishing::Nonzero:
            return Verdict::no("h^" + std::to_string(i) + "(Omega^" + std::to_string(p) + " (x) L^" +
                                   std::to_string(m) + ") = " + h.str(),
                               CohomologyWitness{p, i, m, h});
          case Vanishing::Unknown:
            if (!first_unknown) first_unknown = CohomologyWitness{p, i, m, h};
            break;
        }
      }
  if (first_unknown)
    return Verdict::unknown("h^" + std::to_string(first_unknown->i) + "(Omega^" + std::to_string(first_unknown->p) +
                                " (x) L^" + std::to_string(first_unknown->m) + ") = " + first_unknown->value.str(),
                            first_unknown);
  return Verdict::yes("vanishing certified");
}

inline void require_nonnegative(int k) {
  if (k < 0) throw Error(ErrorCode::OutOfRange, "k must be >= 0");
}

}  // namespace detail

/// H^i(Omega^p (x) L^m) = 0 for all i >= 1, m >= 1, p <= k.
inline Verdict pre_k_du_bois(const ConeSpec& spec, int k) {
  detail::require_nonnegative(k);
  if (spec.smooth_total_space) return Verdict::yes("smooth");
  return detail::scan_vanishing(spec, std::min(k, spec.n), 1, [](int, int, std::int64_t) { return false; });
}

/// pre-k-Du Bois, k <= n/2 and H^p(O_X) = 0 for 1 <= p <= k.
inline Verdict k_du_bois(const ConeSpec& spec, int k) {
  detail::require_nonnegative(k);
  if (spec.smooth_total_space) return Verdict::yes("smooth");
  if (2 * k > spec.n) return Verdict::no("k > n/2 with n = " + std::to_string(spec.n));
  std::optional<Verdict> unknown;
  for (int p = 1; p <= k; ++p) {
    DimValue h = spec.model.hdim(0, p, 0);
    std::string what = "h^" + std::to_string(p) + "(O_X) = " + h.str();
    if (h.is_nonzero()) return Verdict::no(what, CohomologyWitness{0, p, 0, h});
    if (!h.is_zero() && !unknown) unknown = Verdict::unknown(what, CohomologyWitness{0, p, 0, h});
  }
  Verdict pre = pre_k_du_bois(spec, k);
  if (pre.is_no()) return pre;
  if (unknown) return *unknown;
  return pre;
}

/// For k <= n: the vanishing of H^i(Omega^p (x) L^m) for i >= 1, m >= 0,
/// p <= k away from (m, i) = (0, p), plus the cup-product chain up to
/// H^k(Omega^k). For k = n + 1 the verdict of k = n carries over.
inline Verdict pre_k_rational(const ConeSpec& spec, int k) {
  detail::require_nonnegative(k);
  if (k > spec.n + 1)
    throw Error(ErrorCode::OutOfRange, "pre-k-rational is decided only for k <= n + 1 = " + std::to_string(spec.n + 1));
  if (spec.smooth_total_space) return Verdict::yes("smooth");
  if (k == spec.n + 1) {
    Verdict v = pre_k_rational(spec, spec.n);
    v.note = "from k = n: " + v.note;
    return v;
  }

  Tri chain = spec.model.cup_chain(k);
  if (chain == Tri::No) {
    std::string why = "cup-chain refuted";
    for (int j = 0; j <= k; ++j) {
      DimValue h = spec.model.hdim(j, j, 0);
      if (!(h.is_exact() && h.value() == 1)) {
        why += ": h^{" + std::to_string(j) + "," + std::to_string(j) + "} = " + h.str() + " != 1";
        return Verdict::no(why, CohomologyWitness{j, j, 0, h});
      }
    }
    return Verdict::no(why);
  }
  Verdict vanishing =
      detail::scan_vanishing(spec, k, 0, [](int p, int i, std::int64_t m) { return m == 0 && i == p; });
  if (vanishing.is_no()) return vanishing;
  if (chain == Tri::Unknown) return Verdict::unknown("cup-chain not certified up to k = " + std::to_string(k));
  return vanishing;
}

/// pre-k-rational and k < n/2.
inline Verdict k_rational(const ConeSpec& spec, int k) {
  detail::require_nonnegative(k);
  if (spec.smooth_total_space) return Verdict::yes("smooth");
  if (2 * k >= spec.n) return Verdict::no("k >= n/2 with n = " + std::to_string(spec.n));
  return pre_k_rational(spec, k);
}

/// Reflexivity of H^0 DB^p_Z, decided by H^0(X, Omega^p) = 0 for
/// 1 <= p <= dim Z - 2.
inline Verdict h0_reflexive(const ConeSpec& spec, int p) {
  if (p < 1 || p > spec.total_dim - 2)
    throw Error(ErrorCode::CriterionRangeExceeded,
                "reflexivity criterion holds for 1 <= p <= " + std::to_string(spec.total_dim - 2));
  DimValue h = spec.model.hdim(p, 0, 0);
  std::string what = "h^0(Omega^" + std::to_string(p) + ") = " + h.str();
  switch (h.vanishing()) {
    case Vanishing::Zero: return Verdict::yes(what);
    case Vanishing::Nonzero: return Verdict::no(what, CohomologyWitness{p, 0, 0, h});
    case Vanishing::Unknown: return Verdict::unknown(what, CohomologyWitness{p, 0, 0, h});
  }
  return Verdict::unknown(what);
}

struct GradedTable {
  int p = 0;
  int i = 0;
  /// First degree in `entries`: 0 for the coordinate ring (p = i = 0), else 1.
  std::int64_t m_first = 1;
  std::vector<DimValue> entries;
  bool tail_certificate = false;
};

/// Graded pieces of Gamma(H^i DB^p_Z):
///   p = 0: (+)_{m>=1} H^i(L^m) for i > 0; the section ring for i = 0;
///   p >= 1: (+)_{m>=1} H^i(Omega^p (x) L^m) (+) H^i(Omega^{p-1} (x) L^m).
inline GradedTable du_bois_graded_table(const ConeSpec& spec, int p, int i, std::int64_t m_max) {
  if (p < 0 || p > spec.total_dim) throw Error(ErrorCode::OutOfRange, "p must lie in 0..dim Z");
  if (i < 0) throw Error(ErrorCode::OutOfRange, "i must be >= 0");
  if (m_max < 1) throw Error(ErrorCode::OutOfRange, "m_max must be >= 1");
  GradedTable t;
  t.p = p;
  t.i = i;
  if (p == 0 && i == 0) {
    t.m_first = 0;
    for (std::int64_t m = 0; m <= m_max; ++m) t.entries.push_back(DimValue::exact(hilbert_function(spec.model, m)));
    return t;
  }
  for (std::int64_t m = 1; m <= m_max; ++m) {
    DimValue e = spec.model.hdim(p, i, m);
    if (p >= 1) e = e + spec.model.hdim(p - 1, i, m);
    t.entries.push_back(std::move(e));
  }
  t.tail_certificate = i >= 1 && m_max + 1 >= spec.model.vanishing_from();
  return t;
}

/// Largest k such that verdicts 0..k are all Yes. `value` is -1 when k = 0
/// already fails; `saturated` marks that every requested k was Yes.
struct PrefixMax {
  int value = -1;
  bool saturated = false;
  bool stopped_at_unknown = false;

  friend bool operator==(const PrefixMax&, const PrefixMax&) = default;
};

inline PrefixMax prefix_max(const std::vector<Verdict>& verdicts) {
  PrefixMax out;
  for (std::size_t k = 0; k < verdicts.size(); ++k) {
    if (!verdicts[k].is_yes()) {
      out.stopped_at_unknown = verdicts[k].is_unknown();
      return out;
    }
    out.value = static_cast<int>(k);
  }
  out.saturated = true;
  return out;
}

struct SingularityReport {
  int k_max = 0;
  std::vector<Verdict> pre_du_bois;
  std::vector<Verdict> du_bois;
  std::vector<Verdict> pre_rational;
  std::vector<Verdict> rational;
  std::vector<std::string> consistency_failures;

  const std::vector<Verdict>& verdicts(Notion n) const {
    switch (n) {
      case Notion::PreDuBois: return pre_du_bois;
      case Notion::DuBois: return du_bois;
      case Notion::PreRational: return pre_rational;
      case Notion::Rational: return rational;
    }
    return pre_du_bois;
  }
  PrefixMax maximum(Notion n) const { return prefix_max(verdicts(n)); }

  bool any_unknown() const {
    for (Notion n : kAllNotions)
      for (const auto& v : verdicts(n))
        if (v.is_unknown()) return true;
    return false;
  }
};

/// Implication checks between the four verdict arrays and monotonicity of
/// each array in k.
inline std::vector<std::string> consistency_failures(const SingularityReport& r) {
  std::vector<std::string> out;
  const std::size_t len = r.pre_du_bois.size();
  for (std::size_t k = 0; k < len; ++k) {
    if (r.pre_rational[k].is_yes() && r.pre_du_bois[k].is_no())
      out.push_back("k=" + std::to_string(k) + ": pre-k-rational without pre-k-Du Bois");
    if (r.rational[k].is_yes() && r.du_bois[k].is_no())
      out.push_back("k=" + std::to_string(k) + ": k-rational without k-Du Bois");
  }
  for (Notion n : kAllNotions) {
    const auto& v = r.verdicts(n);
    for (std::size_t k = 1; k < v.size(); ++k)
      if (v[k].is_yes() && v[k - 1].is_no())
        out.push_back(std::string(to_string(n)) + ": Yes at k=" + std::to_string(k) + " after No at k=" +
                      std::to_string(k - 1));
  }
  return out;
}

inline SingularityReport full_report(const ConeSpec& spec, int k_max) {
  if (k_max < 0 || k_max > spec.n + 1)
    throw Error(ErrorCode::OutOfRange, "k_max must lie in 0..n+1 = " + std::to_string(spec.n + 1));
  SingularityReport r;
  r.k_max = k_max;
  for (int k = 0; k <= k_max; ++k) {
    r.pre_du_bois.push_back(pre_k_du_bois(spec, k));
    r.du_bois.push_back(k_du_bois(spec, k));
    r.pre_rational.push_back(pre_k_rational(spec, k));
    r.rational.push_back(k_rational(spec, k));
  }
  r.consistency_failures = consistency_failures(r);
  return r;
}

}  // namespace kdb
