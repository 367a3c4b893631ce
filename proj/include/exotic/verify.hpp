#pragma once

// The full stack for one root system, and the invariant suites run by
// `exotic verify`.

#include <cstdint>
#include <memory>
#include <string_view>

#include "exotic/tiltmult.hpp"

namespace exotic {

struct Toolkit {
  std::shared_ptr<const AffineWeylGroup> group;
  std::shared_ptr<const HeckeAlgebra> hecke;
  std::shared_ptr<const KModule> kmod;
  std::shared_ptr<CharacterRing> chars;
  std::shared_ptr<const TiltMult> tilt;

  static Toolkit make(std::string_view spec);
};

// Quadratic, braid and Omega relations, the Bernstein presentation and the
// conjugation formula for T_{t_lambda}, on the box of the given radius.
VerificationReport verify_bernstein_suite(const Toolkit& tk, int radius);

// l(w_lambda) = l(t_lambda) - delta(lambda) and w_lambda has no finite left
// descent; the order on weights agrees with dominance on dominant weights and
// on Weyl orbits, and separates cosets of the root lattice.
VerificationReport verify_order_suite(const Toolkit& tk, int radius);

// The H-module K: quadratic relation on basis vectors, the spherical
// character of m_0, the module axiom on random inputs, line bundle anchors,
// triangularity of standard classes, the inverse generator on costandard
// classes, positivity of random Bott-Samelson classes and reconciliation of
// the costandard formula.
VerificationReport verify_module_suite(const Toolkit& tk, int radius, std::uint64_t seed, int random_samples = 200);

// Positivity of `samples` random Bott-Samelson classes with sequences of
// length at most max_length and random Omega twists.
VerificationReport verify_bott_samelson_positivity(const Toolkit& tk, std::uint64_t seed, int samples, int max_length);

}  // namespace exotic
