#pragma once

#include "matcat/algebra.hpp"

namespace matcat {

// linearly oriented A_n: vertices "1".."n", arrows 1 -> 2 -> ... -> n
AlgebraPtr linear_quiver(int n, const Field& F = Field::rationals());
// vertices 0..n, arrows alpha_i: i -> i+1, all composites alpha_i alpha_{i-1} zero
AlgebraPtr truncated_delta(int n, const Field& F = Field::rationals());
// one vertex, one loop x with x^2 = 0
AlgebraPtr dual_numbers(const Field& F = Field::rationals());

}  // namespace matcat
