#pragma once

#include "coringlab/entwining.hpp"

namespace coringlab {

/// Built-in worked examples; constants are plain data, validated by the
/// corresponding checkers in the test suite and on emission.
namespace catalog {

Algebra base_field_algebra(const Field& F);
Algebra dual_numbers(const Field& F);
Algebra cyclic_group_algebra(const Field& F, int n);

HopfAlgebra hopf_cyclic(const Field& F, int n);  // kC_n, S(g) = g^{-1}
HopfAlgebra hopf_sweedler_h4(const Field& F);    // 4-dim, S of order 4

Coalgebra grouplike_coalgebra(const Field& F, int n);
Coalgebra path_coalgebra_one_arrow(const Field& F);

std::vector<Rat> algebra_one(const Algebra& A);
std::vector<Rat> one_tensor_one(const Algebra& A);

}  // namespace catalog

}  // namespace coringlab
