#pragma once

#include <optional>
#include <vector>

#include "lefschetz/field.hpp"
#include "lefschetz/lie.hpp"

namespace lefschetz {

struct LayerVerdict {
  int layer = 0;
  bool dense = false;
  // Primitive integer covector annihilating the projected subspace, present
  // exactly when the layer is not dense.
  std::optional<std::vector<Integer>> witness;
};

struct AcceptabilityReport {
  std::vector<LayerVerdict> layers;
  bool acceptable = false;
};

// Layer-by-layer density test for the subgroup generated by the subspace
// spanned by p_basis, relative to the standard lattice Z^n on the defining
// basis of L. The image of p ∩ c_j in the torus c_j/c_{j+1} is dense iff no
// nonzero rational covector annihilates it; entries in Q(alpha) are expanded
// over the power basis, turning the test into a rational kernel computation.
AcceptabilityReport is_gamma_acceptable(const LieAlgebra<Rational>& L,
                                        const Matrix<FieldElement>& p_basis);

AcceptabilityReport is_gamma_acceptable(const LieAlgebra<Rational>& L,
                                        const Matrix<Rational>& p_basis);

}  // namespace lefschetz
