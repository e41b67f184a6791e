#include "rankone/json_io.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "rankone/sphericity.hpp"
#include "rankone/toolkit.hpp"

namespace rankone {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) { throw ParseError(msg); }

const Json& field(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    bad(std::string(where) + ": missing field '" + key + "'");
  return *it;
}

void expect_keys(const Json& j, std::initializer_list<const char*> allowed,
                 const char* where) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known) bad(std::string(where) + ": unknown field '" + key + "'");
  }
}

Rat parse_rat(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a rational string");
  try {
    return rat_parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(where + ": " + e.what());
  }
}

CRat parse_entry(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    bad(where + ": expected a [re, im] pair");
  return CRat(parse_rat(j[0], where + "[0]"), parse_rat(j[1], where + "[1]"));
}

/// Fixed-length vector of rational strings.
Vec parse_rat_vector(const Json& j, std::size_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len)
    bad(where + ": expected an array of " + std::to_string(len) +
        " rational strings");
  Vec out(len);
  for (std::size_t i = 0; i < len; ++i)
    out[i] = parse_rat(j[i], where + "[" + std::to_string(i) + "]");
  return out;
}

Vec parse_classical_element(const AmbientAlgebra& alg, const Json& j,
                            const std::string& where) {
  const std::size_t s = alg.matrix_size;
  if (!j.is_array() || j.size() != s)
    bad(where + ": expected a " + std::to_string(s) + "x" +
        std::to_string(s) + " matrix");
  CMat m(s, s);
  for (std::size_t r = 0; r < s; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != s)
      bad(where + "[" + std::to_string(r) + "]: expected a row of " +
          std::to_string(s) + " entries");
    for (std::size_t c = 0; c < s; ++c)
      m.at(r, c) = parse_entry(row[c], where + "[" + std::to_string(r) +
                                           "][" + std::to_string(c) + "]");
  }
  try {
    return alg.from_matrix(m);
  } catch (const std::invalid_argument& e) {
    throw CandidateError(where + ": " + e.what());
  }
}

Vec parse_model_element(const Json& j, const std::string& where) {
  if (!j.is_object())
    bad(where + ": expected an object with m / a / g_alpha / g_2alpha parts");
  expect_keys(j, {"m", "a", "g_alpha", "g_2alpha"}, where.c_str());
  RMat m7(7, 7);
  if (auto it = j.find("m"); it != j.end()) {
    const Json& grid = *it;
    if (!grid.is_array() || grid.size() != 7)
      bad(where + ".m: expected a 7x7 matrix of rational strings");
    for (std::size_t r = 0; r < 7; ++r) {
      const Json& row = grid[r];
      if (!row.is_array() || row.size() != 7)
        bad(where + ".m[" + std::to_string(r) + "]: expected a row of 7");
      for (std::size_t c = 0; c < 7; ++c)
        m7.at(r, c) = parse_rat(row[c], where + ".m[" + std::to_string(r) +
                                            "][" + std::to_string(c) + "]");
    }
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t c = 0; c < 7; ++c)
        if (m7.at(r, c) != Rat(-m7.at(c, r)))
          throw CandidateError(where + ".m: rotation part must be skew");
  }
  Rat a(0);
  if (auto it = j.find("a"); it != j.end()) a = parse_rat(*it, where + ".a");
  Vec v8(8);
  if (auto it = j.find("g_alpha"); it != j.end())
    v8 = parse_rat_vector(*it, 8, where + ".g_alpha");
  Vec w7(7);
  if (auto it = j.find("g_2alpha"); it != j.end())
    w7 = parse_rat_vector(*it, 7, where + ".g_2alpha");
  return f4_element(m7, a, v8, w7);
}

Json rat_vector_json(const Vec& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(rat_str(x));
  return out;
}

void fill_orbit(CaseResult& r, const OrbitVerdict& orbit) {
  for (const auto& [point, rank] : orbit.ranks_at_samples)
    r.ranks_at_samples.push_back(rank);
  if (!orbit.transitive) {
    for (const Rat& x : orbit.witness) r.witness.push_back(rat_str(x));
    r.witness_rank = orbit.witness_rank;
    r.required_rank = orbit.required_rank;
  }
}

}  // namespace

ParsedCandidate parse_candidate(const std::string& json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) bad("top level: expected an object");
  expect_keys(root, {"ambient", "basis"}, "top level");
  const Json& ambient = field(root, "ambient", "top level");
  if (!ambient.is_object()) bad("ambient: expected an object");
  expect_keys(ambient, {"family", "n"}, "ambient");
  const Json& fam = field(ambient, "family", "ambient");
  if (!fam.is_string()) bad("ambient.family: expected a string");
  const std::string fam_name = fam.get<std::string>();
  Family family;
  if (fam_name == "so")
    family = Family::SO;
  else if (fam_name == "su")
    family = Family::SU;
  else if (fam_name == "sp")
    family = Family::SP;
  else if (fam_name == "f4-model")
    family = Family::F4Model;
  else
    bad("ambient.family: unknown family '" + fam_name + "'");

  std::size_t n = 0;
  auto n_it = ambient.find("n");
  if (family == Family::F4Model) {
    if (n_it != ambient.end() &&
        (!n_it->is_number_integer() || n_it->get<long long>() != 0))
      bad("ambient.n: the exceptional model requires n = 0");
  } else {
    if (n_it == ambient.end()) bad("ambient: missing field 'n'");
    if (!n_it->is_number_integer() || n_it->get<long long>() < 0)
      bad("ambient.n: expected a nonnegative integer");
    n = static_cast<std::size_t>(n_it->get<long long>());
  }

  ParsedCandidate out{[&] {
                        try {
                          return construct_algebra(family, n);
                        } catch (const std::invalid_argument& e) {
                          bad(std::string("ambient: ") + e.what());
                        }
                      }(),
                      {}};

  const Json& basis = field(root, "basis", "top level");
  if (!basis.is_array()) bad("basis: expected an array");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string where = "basis[" + std::to_string(i) + "]";
    if (family == Family::F4Model)
      out.basis.push_back(parse_model_element(basis[i], where));
    else
      out.basis.push_back(parse_classical_element(out.alg, basis[i], where));
  }
  return out;
}

std::string candidate_to_json(const AmbientAlgebra& alg,
                              const std::vector<Vec>& basis) {
  Json root;
  root["ambient"] = Json{{"family", family_name(alg.family)},
                         {"n", alg.n}};
  Json list = Json::array();
  for (const Vec& v : basis) {
    if (alg.family == Family::F4Model) {
      RMat m7 = f4_m_part(v);
      Json grid = Json::array();
      for (std::size_t r = 0; r < 7; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < 7; ++c) row.push_back(rat_str(m7.at(r, c)));
        grid.push_back(std::move(row));
      }
      Json elem;
      elem["m"] = std::move(grid);
      elem["a"] = rat_str(f4_a_part(v));
      elem["g_alpha"] = rat_vector_json(f4_galpha_part(v));
      elem["g_2alpha"] = rat_vector_json(f4_g2alpha_part(v));
      list.push_back(std::move(elem));
    } else {
      CMat m = alg.to_matrix(v);
      Json grid = Json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
          row.push_back(Json::array(
              {rat_str(m.at(r, c).re), rat_str(m.at(r, c).im)}));
        grid.push_back(std::move(row));
      }
      list.push_back(std::move(grid));
    }
  }
  root["basis"] = std::move(list);
  return root.dump(2) + "\n";
}

CaseResult check_file(const std::string& path, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();

  CaseResult r;
  r.case_id = path;
  r.theorem_id = "check";
  auto finish = [&](CaseResult& res) {
    res.elapsed_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return res;
  };

  std::optional<ParsedCandidate> cand_file;
  try {
    cand_file = parse_candidate(buf.str());
  } catch (const CandidateError& e) {
    r.computed = std::string("error: ") + e.what();
    r.status = "FAIL";
    return finish(r);
  }
  r.family = family_name(cand_file->alg.family);
  r.n = cand_file->alg.n;

  const AmbientAlgebra& alg = cand_file->alg;
  Subspace h = Subspace::span(cand_file->basis, alg.dim);
  r.dims.emplace_back("h", h.dim());

  try {
    if (!is_subalgebra(alg, h))
      throw CandidateError(
          "NotASubalgebra: the span is not closed under the bracket");

    CandidateSubalgebra cand;
    cand.span = h;
    bool reductive = false;
    if (alg.family != Family::F4Model) {
      auto red = split_reductive(alg, h);
      if (red.ok()) {
        cand.reductive = *red.split;
        reductive = true;
        r.dims.emplace_back("k_H", cand.reductive->k_h.dim());
        r.dims.emplace_back("p_H", cand.reductive->p_h.dim());
      } else {
        auto par = split_parabolic(alg, h);
        if (!par.ok())
          throw CandidateError("NoSplit: reductive: " + red.error_tag + " (" +
                               red.error_detail + "); parabolic: " +
                               par.error_tag + " (" + par.error_detail + ")");
        cand.parabolic = *par.split;
      }
    } else {
      auto par = split_parabolic(alg, h);
      if (!par.ok())
        throw CandidateError("NoSplit: parabolic: " + par.error_tag + " (" +
                             par.error_detail + ")");
      cand.parabolic = *par.split;
    }
    if (cand.parabolic) {
      r.dims.emplace_back("m_H", cand.parabolic->m_h.dim());
      r.dims.emplace_back("a_H", cand.parabolic->a_h.dim());
      r.dims.emplace_back("n_H", cand.parabolic->n_h.dim());
    }

    SphericityVerdict v = reductive ? reductive_spherical(alg, cand, seed)
                                    : nonreductive_spherical(alg, cand, seed);
    r.dims.emplace_back("complement", v.complement_dim);
    r.computed = v.spherical ? "Spherical" : "NotSpherical";
    r.reason = reason_name(v.reason);
    if (v.oracle_ran) fill_orbit(r, v.orbit);
    r.status = "PASS";
  } catch (const std::exception& e) {
    r.computed = std::string("error: ") + e.what();
    r.reason.clear();
    r.status = "FAIL";
  }
  return finish(r);
}

std::string case_result_to_json_line(const CaseResult& r) {
  Json j;
  j["case_id"] = r.case_id;
  j["theorem_id"] = r.theorem_id;
  j["family"] = r.family;
  j["n"] = r.n;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["reason"] = r.reason;
  j["status"] = r.status;
  Json dims = Json::object();
  for (const auto& [k, v] : r.dims) dims[k] = v;
  j["dims"] = std::move(dims);
  j["ranks_at_samples"] = r.ranks_at_samples;
  if (!r.witness.empty()) {
    j["witness"] = r.witness;
    j["witness_rank"] = r.witness_rank;
    j["required_rank"] = r.required_rank;
  }
  return j.dump();
}

std::string report_to_jsonl(const Report& rep) {
  std::string out;
  for (const CaseResult& r : rep.results) {
    out += case_result_to_json_line(r);
    out += '\n';
  }
  Json summary;
  summary["summary"] = Json{{"tool_version", rep.tool_version},
                            {"seed", rep.seed},
                            {"theorem_id", rep.theorem_id},
                            {"n_min", rep.n_min},
                            {"n_max", rep.n_max},
                            {"cases", rep.results.size()},
                            {"pass", rep.pass_count},
                            {"fail", rep.fail_count},
                            {"discrepancy_candidates", rep.discrepancy_count}};
  out += summary.dump();
  out += '\n';
  return out;
}

}  // namespace rankone
