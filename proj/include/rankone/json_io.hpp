#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankone/ambient.hpp"
#include "rankone/campaign.hpp"

namespace rankone {

/// Malformed candidate input: invalid JSON, missing or mistyped fields,
/// unknown family, impossible rank, wrong matrix shape, non-rational entry
/// strings. The CLI maps this to the usage/parse exit code.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that fails to define a candidate in the named ambient
/// (e.g. a matrix violating the defining constraints). The CLI reports it as
/// a failed case, not a usage error.
class CandidateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed candidate file: the ambient algebra it names plus the encoded
/// basis vectors in algebra coordinates.
struct ParsedCandidate {
  AmbientAlgebra alg;
  std::vector<Vec> basis;
};

/// Parse candidate-file JSON text. Throws ParseError on schema violations and
/// CandidateError when a basis matrix is not an element of the ambient.
ParsedCandidate parse_candidate(const std::string& json_text);

/// Canonical serialization of a candidate (inverse of parse_candidate up to
/// basis choice): classical families as [re, im] rational-string matrices,
/// the exceptional model as {m, a, g_alpha, g_2alpha} part objects.
std::string candidate_to_json(const AmbientAlgebra& alg,
                              const std::vector<Vec>& basis);

/// Evaluate a candidate file: parse, verify bracket closure, auto-detect the
/// split (reductive first, parabolic second; the exceptional model is always
/// parabolic), and run the matching criterion. The result's status is PASS
/// exactly when a verdict was reached — the verdict itself (Spherical or
/// NotSpherical) lives in `computed`; structural failures surface as
/// computed = "error: <cause>" with status FAIL. ParseError propagates.
CaseResult check_file(const std::string& path, std::uint64_t seed);

/// One case result as a single JSON-lines record (no trailing newline).
/// Deterministic: elapsed time is not serialized.
std::string case_result_to_json_line(const CaseResult& r);

/// Full campaign report in JSON-lines form: one record per case in catalog
/// order, then a summary record; every line newline-terminated. Two runs
/// with identical inputs produce identical bytes.
std::string report_to_jsonl(const Report& rep);

}  // namespace rankone
