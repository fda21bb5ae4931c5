#pragma once

#include <string>
#include <vector>

#include "lific/matpoly.hpp"

namespace lific {

// P_j goes to block (s,t) (1-based) of M_i with multiplier alpha.
struct Assignment {
  int j = 0;
  int s = 1, t = 1;
  int i = 0;
  Scalar alpha{1};
};

struct PlacementPlan {
  std::string name;
  ConditionKind kind = ConditionKind::AS;
  std::vector<Assignment> assignments;
};

// Coefficient index fed by slot (s,t) of M_i under the given condition, or -1.
int slot_target(ConditionKind kind, int d, int ell, int s, int t, int i);
// Sign the condition attaches to a block in row s ((-1)^(d-s+1) for ASS, else +1).
int slot_sign(ConditionKind kind, int d, int s);

struct ConditionReport {
  bool ok = true;
  int r = -1, c = -1;  // first failing equation P_{ell r + c}
  std::string message;
};

// Checks every equation of the condition. M is (d+1)x(d+1) blocks of size n, grade ell.
template <class T>
ConditionReport verify_condition(const PolyMat<T>& M, const PolyMat<T>& P, ConditionKind kind, int d, int ell);
ConditionReport verify_condition(const BlockPolynomial& M, const MatrixPolynomial& P, ConditionKind kind, int d,
                                 int ell);

// Validates the plan against (kind, d, ell); throws IncompletePlan or OverlapConflict.
void validate_plan(const PlacementPlan& plan, int d, int ell);

template <class T>
PolyMat<T> build_M(const PolyMat<T>& P, const PlacementPlan& plan, int d, int ell) {
  validate_plan(plan, d, ell);
  if (P.rows != P.cols) throw Error(ErrorKind::ShapeMismatch, "P must be square");
  if (P.grade != (2 * d + 1) * ell) throw Error(ErrorKind::ShapeMismatch, "grade of P is not (2d+1) ell");
  size_t n = P.rows, nb = static_cast<size_t>(d) + 1;
  PolyMat<T> M(nb * n, nb * n, ell);
  for (const auto& a : plan.assignments)
    M[a.i].add_block(static_cast<size_t>(a.s - 1) * n, static_cast<size_t>(a.t - 1) * n, P[a.j].scaled(a.alpha));
  return M;
}

// Numeric M with the symbolic register attached.
BlockPolynomial build_M(const MatrixPolynomial& P, const PlacementPlan& plan, int d, int ell,
                        StarFlavor flavor = StarFlavor::Transpose);

// Plans shipped with the library for a structure and (d, ell).
std::vector<PlacementPlan> builtin_plans(const StructureTag& tag, int d, int ell);
// Looks up a builtin plan by name ("sparse" picks the sparse plan); throws IncompletePlan if absent.
PlacementPlan find_plan(const StructureTag& tag, int d, int ell, const std::string& name);

std::string plan_to_json(const PlacementPlan& plan);
PlacementPlan plan_from_json(const std::string& text);

// Plan placing group r on the first support cell of its (anti-)diagonal.
PlacementPlan plan_from_support(ConditionKind kind, int d, int ell, const std::vector<std::pair<int, int>>& support);

}  // namespace lific
