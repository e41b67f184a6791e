#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rankone/action.hpp"
#include "rankone/ambient.hpp"
#include "rankone/toolkit.hpp"

namespace rankone {

/// Expected outcome of a catalog case.
enum class ExpectedStatus {
  Spherical,
  NotSpherical,
  Transitive,
  NotTransitive,
  /// The computed verdict is reported without asserting pass or fail.
  Discrepancy,
};

const char* expected_status_name(ExpectedStatus s);

/// One executable verification case: either a subalgebra candidate to be put
/// through a sphericity criterion (`build` set) or a linear action to be put
/// through the sphere-transitivity oracle (`action` set). Exactly one of the
/// two constructors is set.
struct TableCase {
  std::string case_id;     ///< stable identifier, e.g. "5.2/n=5/block-pair/k=2"
  std::string theorem_id;  ///< owning table id, e.g. "5.2"
  Family family = Family::SO;
  std::size_t n = 0;  ///< ambient rank parameter (0 for the exceptional model)
  /// Display parameters in id order, e.g. {{"k","2"},{"c","torus"}}.
  std::vector<std::pair<std::string, std::string>> params;
  ExpectedStatus expected = ExpectedStatus::Spherical;
  /// Sphericity cases: true selects the reductive criterion, false the
  /// parabolic one. Ignored for action cases.
  bool reductive = true;
  std::string note;  ///< optional human-readable annotation
  std::function<CandidateSubalgebra(const AmbientAlgebra&)> build;
  std::function<LinearAction(const AmbientAlgebra&)> action;
};

/// Table identifiers accepted by the campaign driver, in display order:
/// "5.2", "5.3" (orthogonal), "6.2", "6.3" (unitary), "7.3", "7.4"
/// (quaternion), "8.1-facts", "8.5" (exceptional model).
std::vector<std::string> table_ids();

/// Inclusive default rank sweep for a table; {0, 0} when the table fixes its
/// own ambient (exceptional model).
std::pair<std::size_t, std::size_t> default_rank_range(
    const std::string& theorem_id);

/// All cases of one table at the given rank. The rank argument is ignored for
/// "8.5" and "8.1-facts". Throws std::invalid_argument on unknown ids and on
/// ranks below the family minimum.
std::vector<TableCase> table_cases(const std::string& theorem_id,
                                   std::size_t n);

/// Report-only probes for rows whose computed status deviates from the
/// published parameter ranges. Orthogonal family only; empty otherwise.
std::vector<TableCase> discrepancy_cases(Family family, std::size_t n);

/// Reference entry of the transitivity suite: a compact linear algebra with
/// its module dimension and the known answer.
struct OnishchikEntry {
  std::string name;
  std::size_t module_dim = 0;
  bool transitive = true;
  std::function<std::vector<RMat>()> operators;
};

/// The transitivity reference suite (positives and negative controls),
/// restricted to modules of dimension at most max_dim.
std::vector<OnishchikEntry> onishchik_entries(std::size_t max_dim);

/// Embedding factory by name: "so" (so(param)), "su_in_so", "u_in_so",
/// "sp_in_so" (realified at the given size), "spin7", "spin9", "g2" (param
/// ignored). Throws std::invalid_argument on unknown names.
std::vector<RMat> make_embedding(const std::string& name, std::size_t param);

}  // namespace rankone
