#pragma once

// Runs a variety description through the toric classifier or the cone
// criteria and assembles a deterministic report.

#include <kdb/criteria.hpp>
#include <kdb/spec_file.hpp>
#include <kdb/toric.hpp>

#include <sstream>
#include <string>

namespace kdb {

inline constexpr const char* kToolName = "kdb";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::int64_t kDefaultMMax = 6;

enum ExitCode : int { kExitDecided = 0, kExitInternal = 1, kExitInputError = 2, kExitUndecided = 3 };

struct RunOptions {
  std::optional<std::int64_t> k_max;
  std::optional<std::int64_t> m_max;
};

struct ReportDocument {
  Json json;
  int exit_code = kExitDecided;

  std::string to_json() const { return json.dump(2) + "\n"; }
  std::string to_text() const;
};

inline Json to_json(const Integer& x) {
  if (auto v = to_int64(x)) return *v;
  return x.str();
}

inline Json to_json(const DimValue& d) {
  if (d.is_exact()) return to_json(d.value());
  Json j = Json::object();
  j["lo"] = to_json(d.lo());
  auto hi = d.hi();
  j["hi"] = hi ? to_json(*hi) : Json(nullptr);
  return j;
}

inline Json to_json(const ExtCount& c) {
  if (c.is_infinite()) return "inf";
  return c.value();
}

inline Json to_json(const Verdict& v, std::size_t k) {
  Json j = Json::object();
  j["k"] = k;
  j["status"] = std::string(to_string(v.status));
  if (v.witness) {
    Json w = Json::object();
    w["p"] = v.witness->p;
    w["i"] = v.witness->i;
    w["m"] = v.witness->m;
    w["dim"] = to_json(v.witness->value);
    j["witness"] = std::move(w);
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

/// Per-k toric verdicts packaged like a cone report so the same consistency
/// checks apply.
inline SingularityReport toric_singularity_report(const ToricVerdict& tv, int k_max) {
  SingularityReport r;
  r.k_max = k_max;
  for (int k = 0; k <= k_max; ++k) {
    r.pre_du_bois.push_back(toric_verdict(tv, Notion::PreDuBois, k));
    r.du_bois.push_back(toric_verdict(tv, Notion::DuBois, k));
    r.pre_rational.push_back(toric_verdict(tv, Notion::PreRational, k));
    r.rational.push_back(toric_verdict(tv, Notion::Rational, k));
  }
  r.consistency_failures = consistency_failures(r);
  return r;
}

inline CohomologyModel model_for(const ConeInput& c) {
  return c.base == ConeBase::ProjectiveSpace ? veronese_model(c.first, c.second)
                                             : hypersurface_surface_model(c.first, c.second);
}

namespace detail {

inline void put_verdicts(Json& doc, const SingularityReport& r) {
  Json verdicts = Json::object();
  Json maxima = Json::object();
  for (Notion n : kAllNotions) {
    Json arr = Json::array();
    const auto& vs = r.verdicts(n);
    for (std::size_t k = 0; k < vs.size(); ++k) arr.push_back(to_json(vs[k], k));
    verdicts[std::string(to_string(n))] = std::move(arr);
    PrefixMax m = r.maximum(n);
    Json mj = Json::object();
    mj["value"] = m.value;
    mj["saturated"] = m.saturated;
    mj["stopped_at_unknown"] = m.stopped_at_unknown;
    maxima[std::string(to_string(n)) + "_max"] = std::move(mj);
  }
  doc["verdicts"] = std::move(verdicts);
  doc["maxima"] = std::move(maxima);
  Json cons = Json::object();
  cons["ok"] = r.consistency_failures.empty();
  cons["failures"] = r.consistency_failures;
  doc["consistency"] = std::move(cons);
}

}  // namespace detail

/// Throws kdb::Error on invalid input.
inline ReportDocument run(const VarietySpecFile& spec, const RunOptions& opts = {}) {
  ReportDocument out;
  Json& doc = out.json;
  Json tool = Json::object();
  tool["name"] = kToolName;
  tool["version"] = kToolVersion;
  doc["tool"] = std::move(tool);
  doc["input"] = spec_to_json(spec);

  SingularityReport report;
  if (spec.is_toric()) {
    const auto& t = spec.toric();
    std::vector<IntVector> rays;
    for (const auto& r : t.rays) rays.emplace_back(r.begin(), r.end());
    if (t.ambient_rank > static_cast<std::int64_t>(kMaxAmbientRank))
      throw Error(ErrorCode::TooLarge, "ambient rank must lie in 1.." + std::to_string(kMaxAmbientRank));
    PolyCone cone = validate_cone(rays, static_cast<std::size_t>(t.ambient_rank));
    ToricVerdict tv = classify_toric(cone);
    const std::int64_t k_max = opts.k_max.value_or(spec.k_max.value_or(t.ambient_rank));
    if (k_max < 0) throw Error(ErrorCode::OutOfRange, "k_max must be >= 0");

    Json var = Json::object();
    var["kind"] = "toric";
    var["ambient_rank"] = t.ambient_rank;
    Json prim = Json::array();
    for (const auto& r : cone.rays()) {
      Json ray = Json::array();
      for (const auto& x : r) ray.push_back(to_json(x));
      prim.push_back(std::move(ray));
    }
    var["rays"] = std::move(prim);
    var["dimension"] = cone.dimension();
    var["face_count"] = faces(cone).size();
    var["simplicial"] = tv.is_simplicial;
    var["singular_codim"] = to_json(tv.singular_codim);
    doc["variety"] = std::move(var);

    Json tj = Json::object();
    tj["pre_k_du_bois_max"] = to_json(tv.pre_k_du_bois_max);
    tj["k_du_bois_max"] = to_json(tv.k_du_bois_max);
    tj["pre_k_rational_max"] = to_json(tv.pre_k_rational_max);
    tj["k_rational_max"] = to_json(tv.k_rational_max);
    tj["k_rational_boundary_unknown"] = tv.k_rational_boundary_unknown;
    doc["toric_verdict"] = std::move(tj);

    report = toric_singularity_report(tv, static_cast<int>(k_max));
    doc["effective"] = Json{{"k_max", k_max}};
    detail::put_verdicts(doc, report);
  } else {
    ConeSpec cs(model_for(spec.cone()));
    const std::int64_t k_max = opts.k_max.value_or(spec.k_max.value_or(cs.n + 1));
    const std::int64_t m_max = opts.m_max.value_or(spec.m_max.value_or(kDefaultMMax));
    if (k_max < 0 || k_max > cs.n + 1)
      throw Error(ErrorCode::OutOfRange, "k_max must lie in 0..n+1 = " + std::to_string(cs.n + 1));
    if (m_max < 1) throw Error(ErrorCode::OutOfRange, "m_max must be >= 1");

    Json var = Json::object();
    var["kind"] = "cone";
    var["base"] = cs.model.description();
    var["n"] = cs.n;
    var["total_dim"] = cs.total_dim;
    var["smooth_total_space"] = cs.smooth_total_space;
    var["bott_vanishing_certificate"] = cs.model.bott_vanishing_certificate();
    var["notes"] = Json::array({"C(X,L) is normal for X smooth projective and L ample; seminormality holds"});
    Json diamond = Json::array();
    HodgeDiamond hd = hodge_diamond(cs.model);
    for (int p = 0; p <= cs.n; ++p) {
      Json row = Json::array();
      for (int q = 0; q <= cs.n; ++q) row.push_back(to_json(hd.at(p, q)));
      diamond.push_back(std::move(row));
    }
    var["hodge_diamond"] = std::move(diamond);
    doc["variety"] = std::move(var);
    doc["effective"] = Json{{"k_max", k_max}, {"m_max", m_max}};

    report = full_report(cs, static_cast<int>(k_max));
    detail::put_verdicts(doc, report);

    Json tables = Json::array();
    const int p_top = static_cast<int>(std::min<std::int64_t>(k_max, cs.total_dim));
    for (int p = 0; p <= p_top; ++p)
      for (int i = 0; i <= cs.n; ++i) {
        GradedTable t = du_bois_graded_table(cs, p, i, m_max);
        Json tj = Json::object();
        tj["p"] = t.p;
        tj["i"] = t.i;
        tj["m_first"] = t.m_first;
        Json entries = Json::array();
        for (const auto& e : t.entries) entries.push_back(to_json(e));
        tj["entries"] = std::move(entries);
        tj["tail_certified"] = t.tail_certificate;
        tables.push_back(std::move(tj));
      }
    doc["graded_tables"] = std::move(tables);
  }
  out.exit_code = report.any_unknown() ? kExitUndecided : kExitDecided;
  return out;
}

namespace detail {

inline std::string dim_text(const Json& d) {
  if (d.is_object()) {
    std::string hi = d["hi"].is_null() ? "inf" : d["hi"].dump();
    return d["lo"].dump() + ".." + hi;
  }
  return d.is_string() ? d.get<std::string>() : d.dump();
}

}  // namespace detail

inline std::string ReportDocument::to_text() const {
  std::ostringstream os;
  const Json& doc = json;
  os << doc["tool"]["name"].get<std::string>() << " " << doc["tool"]["version"].get<std::string>() << "\n";
  os << "input: " << doc["input"].dump() << "\n";
  const Json& var = doc["variety"];
  if (var["kind"] == "toric") {
    os << "affine toric variety, ambient rank " << var["ambient_rank"].dump() << ", cone dimension "
       << var["dimension"].dump() << ", " << var["face_count"].dump() << " faces\n";
    os << "simplicial: " << (var["simplicial"].get<bool>() ? "yes" : "no")
       << "   codim of singular locus: " << detail::dim_text(var["singular_codim"]) << "\n";
    const Json& tv = doc["toric_verdict"];
    for (const auto& [key, value] : tv.items())
      if (key != "k_rational_boundary_unknown") os << "  " << key << " = " << detail::dim_text(value) << "\n";
    if (tv["k_rational_boundary_unknown"].get<bool>()) os << "  k-rational at k = (c-1)/2 is undecided\n";
  } else {
    os << "cone over " << var["base"].get<std::string>() << " (n = " << var["n"].dump()
       << ", dim Z = " << var["total_dim"].dump() << ")";
    if (var["smooth_total_space"].get<bool>()) os << ", smooth total space";
    os << "\n";
  }

  os << "\nverdicts:\n";
  for (const auto& [notion, arr] : doc["verdicts"].items()) {
    os << "  " << notion << "\n";
    for (const auto& v : arr) {
      os << "    k=" << v["k"].dump() << "  " << v["status"].get<std::string>();
      if (v.contains("witness")) {
        const Json& w = v["witness"];
        os << "  witness (p,i,m)=(" << w["p"].dump() << "," << w["i"].dump() << "," << w["m"].dump()
           << ") dim " << detail::dim_text(w["dim"]);
      }
      if (v.contains("note")) os << "  [" << v["note"].get<std::string>() << "]";
      os << "\n";
    }
  }
  os << "maxima:\n";
  for (const auto& [key, m] : doc["maxima"].items()) {
    os << "  " << key << " = ";
    if (m["value"].get<int>() < 0) os << "none";
    else os << m["value"].dump();
    if (m["saturated"].get<bool>()) os << " (every requested k holds)";
    if (m["stopped_at_unknown"].get<bool>()) os << " (next k undecided)";
    os << "\n";
  }

  if (doc.contains("graded_tables")) {
    os << "\ngraded pieces of H^i DB^p:\n";
    for (const auto& t : doc["graded_tables"]) {
      os << "  p=" << t["p"].dump() << " i=" << t["i"].dump() << "\n";
      std::int64_t m = t["m_first"].get<std::int64_t>();
      for (const auto& e : t["entries"]) os << "    m=" << m++ << "  " << detail::dim_text(e) << "\n";
      if (t["tail_certified"].get<bool>()) os << "    m>=" << m << "  ⋯ 0 (certified)\n";
    }
  }

  const Json& cons = doc["consistency"];
  os << "\nconsistency: " << (cons["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
  for (const auto& f : cons["failures"]) os << "  " << f.get<std::string>() << "\n";
  return os.str();
}

}  // namespace kdb
