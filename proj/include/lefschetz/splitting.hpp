#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/circle.hpp"
#include "lefschetz/field.hpp"
#include "lefschetz/lie.hpp"

namespace lefschetz {

enum class AnosovClass { Anosov, Generalized, Neither };
std::string to_string(AnosovClass c);

// Spectral class of an endomorphism from its characteristic polynomial:
// Anosov = no eigenvalue on the unit circle, Generalized = some on-circle
// eigenvalue but 1 is not an eigenvalue, Neither = 1 is an eigenvalue.
AnosovClass anosov_class(const Polynomial& char_poly);

// f_*-invariant decomposition g = unstable + stable + neutral by generalized
// eigenspaces, grouped by |lambda| > 1, < 1, = 1. Summand bases may live in a
// quadratic extension Q(alpha) (or a biquadratic compositum); summands whose
// eigenvalues are rational keep rational entries.
struct Splitting {
  FieldPtr extension;  // null when everything stays rational
  Matrix<FieldElement> unstable, stable, neutral;
  std::vector<std::pair<RootEnclosure, int>> eigen_data;

  std::size_t dim_unstable() const { return unstable.cols(); }
  std::size_t dim_stable() const { return stable.cols(); }
  std::size_t dim_neutral() const { return neutral.cols(); }
};

// Throws EigenvalueOne when char_poly(1) = 0, JordanOnCircle when an
// on-circle eigenvalue has a nontrivial Jordan block, UnsupportedScalarTower
// when the off-circle spectrum does not live in a supported real field.
Splitting split(const LieAlgebra<Rational>& L, const RationalMatrix& f);

// Monic quadratic factor of h over Q, if one exists.
std::optional<std::pair<Rational, Rational>> find_monic_quadratic_factor(
    const Polynomial& h);

}  // namespace lefschetz
