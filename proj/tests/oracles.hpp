#pragma once

// Test-only oracles. Nothing here calls into the code paths it checks.

#include <kdb/integer.hpp>
#include <kdb/lattice.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace oracle {

using kdb::Integer;
using kdb::IntVector;
using Rational = boost::multiprecision::cpp_rational;
using Grid = std::vector<std::vector<Integer>>;

/// Determinant by cofactor expansion along the first row.
inline Integer cofactor_det(const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Grid minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    Integer term = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1},
/// D_k = gcd of all k x k minors.
inline std::vector<Integer> invariant_factors(const Grid& m) {
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Integer g = 0;
    for (const auto& rs : subsets(rows, k))
      for (const auto& cs : subsets(cols, k)) {
        Grid minor;
        for (auto r : rs) {
          std::vector<Integer> row;
          for (auto c : cs) row.push_back(m[r][c]);
          minor.push_back(std::move(row));
        }
        g = kdb::gcd(g, cofactor_det(minor));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Feasibility of { u : A_eq u = 0, A_ge u >= 1 } over the rationals by
/// Fourier-Motzkin elimination.
inline bool fm_feasible(const std::vector<IntVector>& eq, const std::vector<IntVector>& ge, std::size_t vars) {
  struct Row {
    std::vector<Rational> a;
    Rational b;  // a.u >= b
  };
  std::vector<Row> rows;
  for (const auto& e : eq) {
    Row pos{{}, 0}, neg{{}, 0};
    for (const auto& x : e) {
      pos.a.emplace_back(x);
      neg.a.emplace_back(-x);
    }
    rows.push_back(pos);
    rows.push_back(neg);
  }
  for (const auto& g : ge) {
    Row r{{}, 1};
    for (const auto& x : g) r.a.emplace_back(x);
    rows.push_back(r);
  }
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.a[v] > 0) pos.push_back(r);
      else if (r.a[v] < 0) neg.push_back(r);
      else next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Rational sp = 1 / p.a[v], sn = -1 / n.a[v];
        Row c{std::vector<Rational>(vars), p.b * sp + n.b * sn};
        for (std::size_t j = 0; j < vars; ++j) c.a[j] = p.a[j] * sp + n.a[j] * sn;
        c.a[v] = 0;
        next.push_back(std::move(c));
      }
    rows = std::move(next);
  }
  for (const auto& r : rows)
    if (r.b > 0) return false;
  return true;
}

/// Brute-force face test: S is a face iff some functional vanishes on S and
/// is positive on every other ray.
inline std::vector<std::vector<std::size_t>> brute_force_faces(const std::vector<IntVector>& rays, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t s = rays.size();
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    std::vector<IntVector> eq, ge;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask & (1u << i)) {
        eq.push_back(rays[i]);
        idx.push_back(i);
      } else {
        ge.push_back(rays[i]);
      }
    }
    if (fm_feasible(eq, ge, n)) out.push_back(idx);
  }
  return out;
}

}  // namespace oracle
