#pragma once

#include <vector>

#include "lific/matrix.hpp"

namespace lific {

// Exact dense linear algebra over Scalar (exact backends).
Scalar determinant(Mat<Scalar> a);
size_t rank(Mat<Scalar> a);
// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(Mat<Scalar>& a);
// Basis of {x : a x = 0}.
std::vector<std::vector<Scalar>> nullspace(const Mat<Scalar>& a);
Mat<Scalar> inverse(const Mat<Scalar>& a);

}  // namespace lific
