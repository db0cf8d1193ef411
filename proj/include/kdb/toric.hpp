#pragma once

// Affine toric varieties given by a strongly convex rational polyhedral cone:
// validation, face lattice, singular-locus codimension and the verdicts of
// the toric classification (pre-k-Du Bois always; k-Du Bois up to (c-1)/2;
// pre-k-rational iff simplicial; k-rational below (c-1)/2 when simplicial).

#include <kdb/error.hpp>
#include <kdb/ext_count.hpp>
#include <kdb/lattice.hpp>
#include <kdb/verdict.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

namespace kdb {

inline constexpr std::size_t kMaxAmbientRank = 8;
inline constexpr std::size_t kMaxRays = 16;

using RayMask = std::uint32_t;

class PolyCone {
 public:
  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  /// Dimension of the linear span of the rays.
  std::size_t dimension() const noexcept { return dimension_; }
  bool is_simplicial() const noexcept { return rays_.size() == dimension_; }

  friend bool operator==(const PolyCone&, const PolyCone&) = default;

 private:
  friend PolyCone validate_cone(const std::vector<IntVector>&, std::size_t);
  PolyCone(std::size_t n, std::vector<IntVector> rays, std::size_t dim)
      : ambient_rank_(n), rays_(std::move(rays)), dimension_(dim) {}

  std::size_t ambient_rank_;
  std::vector<IntVector> rays_;
  std::size_t dimension_;
};

struct Face {
  std::vector<std::size_t> ray_indices;
  std::size_t dimension = 0;

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face& a, const Face& b) {
    if (auto c = a.dimension <=> b.dimension; c != 0) return c;
    return a.ray_indices <=> b.ray_indices;
  }
};

namespace detail {

inline std::vector<std::size_t> mask_indices(RayMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

inline std::vector<IntVector> select(const std::vector<IntVector>& rays, RayMask mask) {
  std::vector<IntVector> out;
  for (auto i : mask_indices(mask)) out.push_back(rays[i]);
  return out;
}

inline std::size_t span_rank(const std::vector<IntVector>& rays, std::size_t ambient) {
  if (rays.empty()) return 0;
  return rank(IntegerMatrix::from_columns(rays, ambient));
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Cone rewritten in integer coordinates of a basis of (span of rays) ∩ N,
/// where it is full-dimensional, together with its facets.
struct ConeGeometry {
  std::size_t dim = 0;
  std::vector<IntVector> coords;
  std::vector<IntVector> facet_normals;
  std::vector<RayMask> facet_masks;
};

/// Normal u with u.x = det[v_1 .. v_{d-1} x] for d-1 vectors in Z^d.
inline IntVector cofactor_normal(const std::vector<IntVector>& vs, std::size_t d) {
  IntVector u(d);
  for (std::size_t k = 0; k < d; ++k) {
    IntegerMatrix minor(d - 1, d - 1);
    for (std::size_t i = 0, r = 0; i < d; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j + 1 < d; ++j) minor(r, j) = vs[j][i];
      ++r;
    }
    Integer m = determinant(minor);
    u[k] = ((k + d - 1) % 2 == 0) ? m : Integer(-m);
  }
  return u;
}

inline void for_each_subset(std::size_t n, std::size_t k, auto&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline ConeGeometry cone_geometry(const std::vector<IntVector>& rays, std::size_t ambient) {
  ConeGeometry g;
  if (rays.empty()) return g;
  auto R = IntegerMatrix::from_columns(rays, ambient);
  auto snf = smith_normal_form(R);
  g.dim = snf.rank();
  IntegerMatrix UR = snf.U * R;
  for (std::size_t j = 0; j < rays.size(); ++j) {
    IntVector c(g.dim);
    for (std::size_t i = 0; i < g.dim; ++i) c[i] = UR(i, j);
    g.coords.push_back(std::move(c));
  }
  const std::size_t s = rays.size();
  if (g.dim == 1) {
    // A line: the only candidate facet is the origin, cut out by +-1.
    int sign = g.coords[0][0] > 0 ? 1 : -1;
    bool same = std::all_of(g.coords.begin(), g.coords.end(), [&](const IntVector& c) { return (c[0] > 0) == (sign > 0); });
    if (same) {
      g.facet_normals.push_back(IntVector{Integer(sign)});
      g.facet_masks.push_back(0);
    }
    return g;
  }
  std::set<RayMask> seen;
  for_each_subset(s, g.dim - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> vs;
    for (auto i : idx) vs.push_back(g.coords[i]);
    IntVector u = cofactor_normal(vs, g.dim);
    if (std::all_of(u.begin(), u.end(), [](const Integer& x) { return x == 0; })) return;
    bool pos = false, neg = false;
    RayMask on = 0;
    for (std::size_t j = 0; j < s; ++j) {
      Integer v = dot(u, g.coords[j]);
      if (v > 0) pos = true;
      else if (v < 0) neg = true;
      else on |= RayMask(1) << j;
    }
    if (pos && neg) return;
    if (neg)
      for (auto& x : u) x = -x;
    if (!seen.insert(on).second) return;
    g.facet_normals.push_back(primitive_vector(u));
    g.facet_masks.push_back(on);
  });
  return g;
}

inline bool is_pointed(const ConeGeometry& g) {
  if (g.dim == 0) return true;
  if (g.facet_normals.empty()) return false;
  if (g.dim == 1) return true;
  // The cone is the intersection of its facet half-spaces; its lineality
  // space is the common kernel of the facet normals.
  return rank(IntegerMatrix::from_columns(g.facet_normals, g.dim)) == g.dim;
}

/// Every face of a pointed cone is an intersection of facets (the whole cone
/// being the empty intersection).
inline std::vector<RayMask> face_masks(const ConeGeometry& g, std::size_t ray_count) {
  const RayMask full = ray_count == 0 ? 0 : RayMask((std::uint64_t(1) << ray_count) - 1);
  std::set<RayMask> found{full};
  std::vector<RayMask> queue{full};
  while (!queue.empty()) {
    RayMask f = queue.back();
    queue.pop_back();
    for (RayMask facet : g.facet_masks) {
      RayMask meet = f & facet;
      if (found.insert(meet).second) queue.push_back(meet);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace detail

/// Primitivizes the rays and checks strong convexity and irredundancy.
inline PolyCone validate_cone(const std::vector<IntVector>& raw_rays, std::size_t ambient_rank) {
  if (ambient_rank == 0 || ambient_rank > kMaxAmbientRank)
    throw Error(ErrorCode::TooLarge, "ambient rank must lie in 1.." + std::to_string(kMaxAmbientRank));
  if (raw_rays.size() > kMaxRays) throw Error(ErrorCode::TooLarge, "at most " + std::to_string(kMaxRays) + " rays");

  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < raw_rays.size(); ++i) {
    if (raw_rays[i].size() != ambient_rank)
      throw Error(ErrorCode::DimensionMismatch, "ray " + std::to_string(i) + " has length " +
                                                    std::to_string(raw_rays[i].size()) + ", expected " +
                                                    std::to_string(ambient_rank));
    rays.push_back(primitive_vector(raw_rays[i]));
  }

  auto geom = detail::cone_geometry(rays, ambient_rank);
  if (!detail::is_pointed(geom)) throw Error(ErrorCode::NotStronglyConvex, "the cone contains a line");

  // Extreme rays are the one-dimensional faces; for repeated rays the first
  // occurrence is kept.
  std::vector<bool> extreme(rays.size(), false);
  for (RayMask m : detail::face_masks(geom, rays.size())) {
    if (m == 0) continue;
    auto idx = detail::mask_indices(m);
    if (detail::span_rank(detail::select(rays, m), ambient_rank) == 1) extreme[idx.front()] = true;
  }
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (!extreme[i]) throw RedundantRayError(i);

  return PolyCone(ambient_rank, std::move(rays), geom.dim);
}

/// Complete face list, zero face and the cone itself included, ordered by
/// (dimension, ray indices).
inline std::vector<Face> faces(const PolyCone& cone) {
  auto geom = detail::cone_geometry(cone.rays(), cone.ambient_rank());
  std::vector<Face> out;
  for (RayMask m : detail::face_masks(geom, cone.rays().size())) {
    auto sub = detail::select(cone.rays(), m);
    out.push_back({detail::mask_indices(m), detail::span_rank(sub, cone.ambient_rank())});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A face is smooth iff it is simplicial and its rays are part of a basis of
/// the saturated lattice they span.
inline bool is_smooth_face(const PolyCone& cone, const Face& face) {
  if (face.ray_indices.size() != face.dimension) return false;
  std::vector<IntVector> sub;
  for (auto i : face.ray_indices) sub.push_back(cone.rays()[i]);
  return is_smooth_simplicial_cone(sub, cone.ambient_rank());
}

/// The orbit closure of a face has codimension equal to the face's dimension,
/// so the singular locus has codimension min{dim tau : tau not smooth}.
inline ExtCount singular_locus_codim(const PolyCone& cone) {
  ExtCount best = ExtCount::infinity();
  for (const auto& f : faces(cone)) {
    if (is_smooth_face(cone, f)) continue;
    best = std::min(best, ExtCount(static_cast<std::int64_t>(f.dimension)));
  }
  return best;
}

struct ToricVerdict {
  bool is_simplicial = true;
  ExtCount singular_codim = ExtCount::infinity();
  ExtCount pre_k_du_bois_max = ExtCount::infinity();
  ExtCount k_du_bois_max = ExtCount::infinity();
  ExtCount pre_k_rational_max = ExtCount::infinity();
  ExtCount k_rational_max = ExtCount::infinity();
  /// Set when c is odd and the cone simplicial: k = (c-1)/2 is undecided
  /// for k-rationality.
  bool k_rational_boundary_unknown = false;

  bool smooth() const { return singular_codim.is_infinite(); }

  friend bool operator==(const ToricVerdict&, const ToricVerdict&) = default;
};

inline ToricVerdict classify_toric(const PolyCone& cone) {
  ToricVerdict v;
  v.is_simplicial = cone.is_simplicial();
  v.singular_codim = singular_locus_codim(cone);
  if (v.smooth()) return v;

  const std::int64_t c = v.singular_codim.value();
  // Normal varieties have c >= 2, so both maxima below are >= 0.
  v.k_du_bois_max = ExtCount((c - 1) / 2);
  if (v.is_simplicial) {
    v.pre_k_rational_max = ExtCount::infinity();
    // Largest k with 2k < c - 1.
    v.k_rational_max = ExtCount((c - 2) / 2);
    v.k_rational_boundary_unknown = (c % 2 == 1);
  } else {
    v.pre_k_rational_max = ExtCount(0);
    v.k_rational_max = ExtCount(0);
  }
  return v;
}

/// Per-k verdict derived from a toric classification.
inline Verdict toric_verdict(const ToricVerdict& tv, Notion notion, std::int64_t k) {
  if (tv.smooth()) return Verdict::yes("smooth");
  const std::string c = tv.singular_codim.str();
  switch (notion) {
    case Notion::PreDuBois:
      return Verdict::yes("toric varieties are pre-k-Du Bois for all k");
    case Notion::DuBois:
      if (ExtCount(k) <= tv.k_du_bois_max) return Verdict::yes("k <= (c-1)/2, c = " + c);
      return Verdict::no("k > (c-1)/2, c = " + c);
    case Notion::PreRational:
      if (ExtCount(k) <= tv.pre_k_rational_max) return Verdict::yes(tv.is_simplicial ? "simplicial cone" : "rational");
      return Verdict::no("non-simplicial cone: not pre-1-rational");
    case Notion::Rational:
      if (ExtCount(k) <= tv.k_rational_max)
        return Verdict::yes(tv.is_simplicial ? "k < (c-1)/2, c = " + c : "rational");
      if (tv.k_rational_boundary_unknown && ExtCount(k) == ExtCount(tv.k_rational_max.value() + 1))
        return Verdict::unknown("k = (c-1)/2 is not decided, c = " + c);
      return Verdict::no(tv.is_simplicial ? "k >= (c-1)/2, c = " + c : "non-simplicial cone: not 1-rational");
  }
  return Verdict::unknown("unhandled notion");
}

}  // namespace kdb
