#pragma once

#include <string>
#include <vector>

#include "lefschetz/lie.hpp"
#include "lefschetz/polymap.hpp"

namespace lefschetz {

// Simply connected nilpotent group in polynomial coordinates. Coordinates are
// partitioned into central-series layers, outermost first; the group law is
// triangular across layers and the standard lattice Z^n is a subgroup exactly
// when all coefficients are integers.
struct PolynomialGroup {
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> layer_blocks;
  PolynomialMap multiplication;  // 2n inputs (x, y) -> n
  PolynomialMap inverse;         // n -> n

  std::vector<Rational> multiply(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const;
};

struct GroupValidation {
  bool shapes = true;
  bool blocks_partition = true;
  bool left_identity = true;
  bool right_identity = true;
  bool inverse_identity = true;
  bool associative = true;
  bool triangular = true;
  bool integer_coefficients = true;  // lattice closure of Z^n
  std::string detail;
  bool structural_ok() const {
    return shapes && blocks_partition && left_identity && right_identity &&
           inverse_identity && associative && triangular;
  }
  bool ok() const { return structural_ok() && integer_coefficients; }
};

// Exact polynomial-identity checks of every group invariant; the first
// failing identity is described with a witness monomial in detail.
GroupValidation validate_group(const PolynomialGroup& g);

// Group law from the truncated Baker-Campbell-Hausdorff series in exponential
// coordinates (Dynkin terms up to the nilpotency class, exact rational
// coefficients); inverse(x) = -x. Sets *integer_warning when some
// coefficient is not an integer, in which case Z^n is not a subgroup and
// fixed-point enumeration is refused downstream. Requires the defining basis
// to be adapted to the lower central series.
PolynomialGroup bch_group_from_algebra(const LieAlgebra<Rational>& L,
                                       bool* integer_warning);

// Group endomorphism as a polynomial self-map with its Jacobian at 0.
struct GroupEndomorphism {
  PolynomialMap map;
  RationalMatrix linear_part;
};

// Validates map(0) = 0, the homomorphism identity (exact expansion), lattice
// preservation (integer-valued coordinates via the binomial test), and the
// absence of eigenvalue 1 in the linear part.
GroupEndomorphism validate_endomorphism_map(const PolynomialGroup& g,
                                            const PolynomialMap& f);

// Layer blocks of L's defining basis, outermost first; throws when the basis
// is not adapted to the lower central series.
std::vector<std::vector<std::size_t>> adapted_layer_blocks(
    const LieAlgebra<Rational>& L);

// The bilinear part of the group law antisymmetrizes to the Lie bracket;
// verifies the group's infinitesimal structure against L.
bool group_matches_algebra(const PolynomialGroup& g,
                           const LieAlgebra<Rational>& L);

}  // namespace lefschetz
