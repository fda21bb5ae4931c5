#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lific/matpoly.hpp"
#include "lific/mobius.hpp"

namespace lific {

using Rng = std::mt19937_64;

// Small exact values: numerators in [-range, range], denominators in [1, 3].
Scalar random_scalar(Rng& rng, Backend b, int range = 5);
Mat<Scalar> random_matrix(Rng& rng, size_t rows, size_t cols, Backend b, int range = 5);
MatrixPolynomial random_polynomial(Rng& rng, size_t n, int k, Backend b, int range = 5);

// 1/2 (Q + M_A[sign Q]^star) for random Q; structured by construction.
MatrixPolynomial random_structured(Rng& rng, const StructureTag& tag, size_t n, int k, Backend b, int range = 5);

// Random structured P whose determinant is not identically zero (up to `attempts` draws).
MatrixPolynomial random_regular_structured(Rng& rng, const StructureTag& tag, size_t n, int k, Backend b,
                                           int attempts = 20);

// Scalar (n = 1) structured polynomial with tag-like coefficients: distinct
// wherever the structure allows (always for the conjugate-transpose flavor).
MatrixPolynomial tagged_polynomial(const StructureTag& tag, int k);

struct SingularInstance {
  MatrixPolynomial P;
  std::vector<int> right_indices, left_indices;
};

// P = M_A[B]^star D B with B = diag([lambda^a_1, 1], ..., [lambda^a_r, 1]) and D a regular
// structured r x r polynomial, so the right and left minimal indices are the sorted a_i.
SingularInstance singular_structured(Rng& rng, const StructureTag& tag, const std::vector<int>& degrees, int k,
                                     Backend b);

}  // namespace lific
