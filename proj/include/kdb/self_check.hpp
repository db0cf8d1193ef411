#pragma once

// Invariant suites shipped with the library and runnable from the CLI
// (`kdb --self-check`).

#include <kdb/report.hpp>

#include <random>
#include <string>
#include <vector>

namespace kdb {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
};

inline std::vector<ConeSpec> fixture_cone_specs() {
  std::vector<ConeSpec> out;
  for (int r = 1; r <= 6; ++r)
    for (int d = 1; d <= 3; ++d) out.emplace_back(veronese_model(r, d));
  for (int d = 1; d <= 5; ++d)
    for (int l = 1; l <= 6; ++l) out.emplace_back(hypersurface_surface_model(d, l));
  return out;
}

inline std::vector<std::pair<std::vector<IntVector>, std::size_t>> fixture_toric_cones() {
  auto v = [](std::initializer_list<long long> xs) {
    IntVector out;
    for (auto x : xs) out.emplace_back(x);
    return out;
  };
  return {
      {{v({1, 0}), v({0, 1})}, 2},
      {{v({1, 0}), v({1, 2})}, 2},
      {{v({0, 0, 1}), v({1, 0, 1}), v({0, 1, 1}), v({1, 1, 1})}, 3},
      {{v({1, 0, 0}), v({0, 1, 0}), v({1, 1, 2})}, 3},
      {{v({1, 0, 0}), v({0, 1, 0}), v({1, 1, 3})}, 3},
      {{v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 0}), v({1, 1, 1, 2})}, 4},
      {{v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 0}), v({1, 1, 1, 3})}, 4},
      {{v({1, 0, 0, 1}), v({0, 1, 0, 1}), v({0, 0, 1, 1}), v({1, 1, 0, 1}), v({1, 0, 1, 1}), v({0, 1, 1, 1})}, 4},
  };
}

/// (a) U*M*V = D, divisibility chain and unimodular transforms.
inline SuiteResult check_smith(std::size_t samples = 500, unsigned seed = 20261016) {
  SuiteResult res{"smith normal form reconstruction", 0, {}};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> size(1, 5), entry(-9, 9);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t rows = size(rng), cols = size(rng);
    IntegerMatrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) M(i, j) = entry(rng);
    auto snf = smith_normal_form(M);
    const std::string tag = "sample " + std::to_string(s);
    res.expect(snf.U * M * snf.V == snf.D, tag + ": U*M*V != D");
    res.expect(abs(determinant(snf.U)) == 1, tag + ": |det U| != 1");
    res.expect(abs(determinant(snf.V)) == 1, tag + ": |det V| != 1");
    bool diagonal = true;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && snf.D(i, j) != 0) diagonal = false;
    res.expect(diagonal, tag + ": D not diagonal");
    const std::size_t r = snf.rank();
    bool chain = true;
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) {
      if (i < r && snf.D(i, i) <= 0) chain = false;
      if (i >= r && snf.D(i, i) != 0) chain = false;
      if (i + 1 < r && snf.D(i + 1, i + 1) % snf.D(i, i) != 0) chain = false;
    }
    res.expect(chain, tag + ": divisibility chain broken");
  }
  return res;
}

/// (b) sum_q (-1)^q bott = chi and Serre duality, n <= 4, |m| <= 12.
inline SuiteResult check_bott() {
  SuiteResult res{"bott formula vs euler characteristic and serre duality", 0, {}};
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (int m = -12; m <= 12; ++m) {
        Integer alt = 0;
        for (int q = 0; q <= n; ++q) alt += (q % 2 == 0 ? 1 : -1) * bott(n, p, q, m);
        const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " m=" + std::to_string(m);
        res.expect(alt == euler_char_omega(n, p, m), tag + ": chi mismatch");
        for (int q = 0; q <= n; ++q)
          res.expect(bott(n, p, q, m) == bott(n, n - p, n - q, -m), tag + " q=" + std::to_string(q) + ": serre");
      }
  return res;
}

/// (c) Hodge symmetry of every catalogued diamond.
inline SuiteResult check_hodge() {
  SuiteResult res{"hodge symmetry of catalog diamonds", 0, {}};
  for (const auto& spec : fixture_cone_specs())
    res.expect(hodge_diamond(spec.model).symmetric(), spec.model.description());
  return res;
}

/// (d) pre-k-rational => pre-k-Du Bois, k-rational => k-Du Bois and
/// monotonicity over every fixture and every k.
inline SuiteResult check_implications() {
  SuiteResult res{"implication lattice over fixtures", 0, {}};
  for (const auto& spec : fixture_cone_specs()) {
    auto r = full_report(spec, spec.n + 1);
    res.expect(r.consistency_failures.empty(),
               spec.model.description() + (r.consistency_failures.empty() ? "" : ": " + r.consistency_failures[0]));
  }
  for (const auto& [rays, n] : fixture_toric_cones()) {
    auto cone = validate_cone(rays, n);
    auto r = toric_singularity_report(classify_toric(cone), static_cast<int>(n));
    res.expect(r.consistency_failures.empty(), "toric cone in rank " + std::to_string(n));
  }
  return res;
}

/// (e) the plane as a degree-1 surface agrees with P^2 on exact entries.
inline SuiteResult check_plane_models() {
  SuiteResult res{"degree-1 surface agrees with P^2", 0, {}};
  for (int l = 1; l <= 3; ++l) {
    auto surf = hypersurface_surface_model(1, l);
    auto proj = veronese_model(2, l);
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q)
        for (int m = -8; m <= 8; ++m) {
          DimValue a = surf.hdim(p, q, m);
          if (!a.is_exact()) continue;
          res.expect(a.value() == proj.hdim(p, q, m).value(),
                     "l=" + std::to_string(l) + " (p,q,m)=(" + std::to_string(p) + "," + std::to_string(q) + "," +
                         std::to_string(m) + ")");
        }
  }
  return res;
}

inline std::vector<SuiteResult> run_self_check() {
  return {check_smith(), check_bott(), check_hodge(), check_implications(), check_plane_models()};
}

}  // namespace kdb
