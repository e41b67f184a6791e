#pragma once

// Internal construction helpers shared by the per-family catalog files.

#include <functional>
#include <string>
#include <vector>

#include "rankone/catalog.hpp"
#include "rankone/normal_forms.hpp"

namespace rankone::detail {

// --- spans and linear cuts --------------------------------------------------

/// Algebra-coordinate span of a list of ambient matrices.
Subspace span_matrices(const AmbientAlgebra& alg, const std::vector<CMat>& mats);

/// Span of those rational combinations of the generator vectors (algebra
/// coordinates) on which every functional vanishes. Functionals must be
/// linear; they are evaluated on the generators and the combination space is
/// cut by the resulting kernel.
Subspace cut_span(const AmbientAlgebra& alg, const std::vector<Vec>& gens,
                  const std::vector<std::function<Rat(const Vec&)>>& fns);

/// Matrix flavour of cut_span: generators are ambient matrices (possibly
/// outside the algebra individually, e.g. traceful), functionals are linear
/// in the matrix entries, and surviving combinations must land in the
/// algebra.
Subspace span_with_constraints(
    const AmbientAlgebra& alg, const std::vector<CMat>& gens,
    const std::vector<std::function<Rat(const CMat&)>>& fns);

/// Cut an existing subspace by linear functionals on ambient matrices.
Subspace cut_subspace(const AmbientAlgebra& alg, const Subspace& s,
                      const std::vector<std::function<Rat(const CMat&)>>& fns);

/// Imaginary part of the full trace (the unitary-family determinant-one
/// constraint at the algebra level).
Rat im_trace(const CMat& x);

/// Imaginary part of the partial trace over diagonal slots lo..lo+d-1.
std::function<Rat(const CMat&)> im_trace_block(std::size_t lo, std::size_t d);

// --- candidate wrappers ------------------------------------------------------

/// Wraps a span as a candidate with its reductive split computed; throws
/// std::runtime_error with the split's error tag on failure.
CandidateSubalgebra reductive_candidate(const AmbientAlgebra& alg,
                                        const Subspace& h);

/// Wraps a span as a candidate with its parabolic split computed; throws
/// std::runtime_error with the split's error tag on failure.
CandidateSubalgebra parabolic_candidate(const AmbientAlgebra& alg,
                                        const Subspace& h);

// --- block embeddings --------------------------------------------------------

/// Real operators as a diagonal block at offset lo of a size-s complex
/// matrix.
std::vector<CMat> real_block(const std::vector<RMat>& ops, std::size_t lo,
                             std::size_t s);

/// Complex operators as a diagonal block at offset lo of a size-s matrix.
std::vector<CMat> complex_block(const std::vector<CMat>& ops, std::size_t lo,
                                std::size_t s);

/// Quaternion-family A/B-block embedding. `op2d` is a 2d x 2d complex matrix
/// in the [[Z, -conj(W)], [W, conj(Z)]] convention; the result places Z / W
/// (and their mirrors) at A-slot offset lo of the ambient pattern.
CMat sp_block_elem(const AmbientAlgebra& alg, const CMat& op2d,
                   std::size_t lo);
std::vector<CMat> sp_block(const AmbientAlgebra& alg,
                           const std::vector<CMat>& ops2d, std::size_t lo);

/// Quaternion-family element of the centralizer-side sp(1): acts on the
/// distinguished quaternion slot and on the (e, f)-sector simultaneously.
/// Parameters: e imaginary, f complex.
CMat sp_mside_elem(const AmbientAlgebra& alg, const CRat& e, const CRat& f);

/// The three standard generators (e,f) = (i,0), (0,1), (0,-i) of the
/// centralizer-side sp(1).
std::vector<CMat> sp_mside_gens(const AmbientAlgebra& alg);

// --- free-factor sampling ----------------------------------------------------

/// Sample of a free compact factor: zero, first-generator line, or full span.
enum class FactorSample { Zero, Torus, Full };

const char* factor_sample_name(FactorSample s);

/// The distinct sample kinds for a factor with the given generator count.
/// A 0-dimensional factor admits only Zero; a 1-dimensional one Zero and
/// Full. With proper_only (a factor constrained to be a proper subalgebra)
/// the Full sample is dropped.
std::vector<FactorSample> factor_samples(std::size_t gen_count,
                                         bool proper_only = false);

/// Applies the sample: empty, first generator only, or all generators.
std::vector<CMat> take_sample(const std::vector<CMat>& gens, FactorSample s);
std::vector<Vec> take_sample_vecs(const std::vector<Vec>& gens,
                                  FactorSample s);

/// Real operators padded into a larger square matrix at diagonal offset lo.
std::vector<RMat> embed_rmats(const std::vector<RMat>& ops, std::size_t lo,
                              std::size_t size);

/// Right-multiplication operators by the three imaginary quaternion units on
/// H^slots, in the realified coordinates of sp_in_so(slots) (both complex
/// halves of q = z + j w realified in order). They commute with sp_in_so.
std::vector<RMat> quat_right_mults(std::size_t slots);

// --- per-family case factories (one translation unit each) -------------------

std::vector<TableCase> orthogonal_cases(const std::string& theorem_id,
                                        std::size_t n);
std::vector<TableCase> unitary_cases(const std::string& theorem_id,
                                     std::size_t n);
std::vector<TableCase> quaternion_cases(const std::string& theorem_id,
                                        std::size_t n);
std::vector<TableCase> exceptional_cases(const std::string& theorem_id);

}  // namespace rankone::detail
