#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lific/matpoly.hpp"
#include "lific/mobius.hpp"

namespace lific {

// Returns true to request cancellation; called once per pivot.
using ProgressCallback = std::function<bool(size_t step, size_t total)>;

constexpr size_t kSmithSizeCap = 80;

struct SmithForm {
  size_t rank = 0;
  std::vector<ScalarPoly> factors;  // monic, d_1 | d_2 | ... | d_rank
};

// Invariant factors by exact elimination over F[lambda].
SmithForm smith_form(const MatrixPolynomial& p, const ProgressCallback& progress = {});

enum class Side { Left, Right };

// Degrees of a minimal basis of the left or right rational null space.
std::vector<int> measure_minimal_indices(const MatrixPolynomial& p, Side side);

// Rank over the rational function field.
size_t normal_rank(const MatrixPolynomial& p);

struct VerificationReport {
  bool is_lification = false;
  bool is_strong = false;
  int padding = -1;
  bool size_law = false;  // size(L) * ell == size(P) * k
  std::vector<ScalarPoly> invariant_factors_P, invariant_factors_L;
  std::vector<ScalarPoly> invariant_factors_revP, invariant_factors_revL;
  std::optional<Scalar> det_ratio;  // empty when nonconstant or P singular
  bool singular = false;
  std::vector<int> right_indices_P, right_indices_L, left_indices_P, left_indices_L;
  std::map<std::string, bool> structure_checks;
  std::optional<size_t> block_census;
  std::string det_ratio_text() const;
};

struct CertifyOptions {
  bool measure_indices = true;
  bool structure_checks = true;
  ProgressCallback progress;
};

VerificationReport certify_lification(const MatrixPolynomial& L, const MatrixPolynomial& P, int ell, int k,
                                      const CertifyOptions& opts = {});
VerificationReport certify_lification(const BlockPolynomial& L, const MatrixPolynomial& P, int ell, int k,
                                      const CertifyOptions& opts = {});

enum class CompanionMode { Companion, Generalized };

// Companion: every nonzero block of every coefficient is alpha I or alpha P_j.
// Generalized: every block is a polynomial in P_0..P_k (no auxiliary or starred symbols).
bool companion_predicate(const BlockPolynomial& L, CompanionMode mode);

struct SparsityReport {
  size_t count = 0;          // register census when provenance is present
  size_t numeric_count = 0;  // nonzero blocks of the stored coefficients
  int d = 0, ell = 1;
  size_t sparse_bound = 0;      // 5d+1 for ell = 1, 6d+1 otherwise
  size_t structured_floor = 0;  // 7d+1 for symmetric/alternating with ell > 1, else sparse_bound
  bool sparse = false;          // count == sparse_bound
};

SparsityReport sparsity_census(const BlockPolynomial& L, int d, int ell,
                               const std::optional<StructureTag>& tag = std::nullopt);

}  // namespace lific
