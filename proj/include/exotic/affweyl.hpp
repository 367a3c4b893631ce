#pragma once

// The extended affine Weyl group W ⋉ X with its Iwahori–Matsumoto length,
// the length-zero subgroup Omega, affine Coxeter generators, reduced words,
// Bruhat order and the minimal coset representatives w_lambda.

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "exotic/rootdata.hpp"

namespace exotic {

// w * t_lambda
struct AffineElement {
  WeylElement finite;
  Weight translation;

  std::strong_ordering operator<=>(const AffineElement& o) const {
    if (auto c = translation <=> o.translation; c != 0) return c;
    return finite <=> o.finite;
  }
  bool operator==(const AffineElement& o) const { return translation == o.translation && finite == o.finite; }
};

// Generator ids: 0 .. rank-1 are the finite simple reflections s_1 .. s_rank,
// rank + k is the affine simple reflection of irreducible component k.
using GeneratorId = int;

struct ReducedWord {
  int omega = 0;  // index into AffineWeylGroup::omegas()
  std::vector<GeneratorId> word;
};

struct OmegaDecomposition {
  int omega = 0;
  AffineElement coxeter_part;  // translation part in ZPhi
};

struct WLambda {
  AffineElement element;
  int delta = 0;
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootSystem rs);
  static std::shared_ptr<const AffineWeylGroup> make(std::string_view spec);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }

  AffineElement identity() const;
  AffineElement translation(const Weight& lambda) const;
  AffineElement finite(const WeylElement& w) const;
  AffineElement multiply(const AffineElement& a, const AffineElement& b) const;
  AffineElement inverse(const AffineElement& a) const;

  // Iwahori–Matsumoto length
  //   l(w t_lambda) = sum_{a > 0, w a > 0} |<lambda, a^vee>| + sum_{a > 0, w a < 0} |1 + <lambda, a^vee>|.
  int length(const AffineElement& x) const;

  int num_generators() const { return static_cast<int>(generators_.size()); }
  const std::vector<AffineElement>& generators() const { return generators_; }
  const AffineElement& generator(GeneratorId s) const { return generators_[static_cast<std::size_t>(s)]; }
  bool is_finite_generator(GeneratorId s) const { return s < rank(); }
  std::string generator_name(GeneratorId s) const;
  // Accepts "s1".."sN", "s0" (single component) and "s0_k" (component k, 1-based).
  GeneratorId parse_generator(std::string_view name) const;
  // The finite reflection s_gamma whose product with a translation gives the
  // affine generator of component k, and gamma itself.
  int affine_root(int component) const { return affine_roots_[static_cast<std::size_t>(component)]; }

  // Omega: the length-zero elements, one per class of X / ZPhi. Index 0 is the identity.
  const std::vector<AffineElement>& omegas() const { return omegas_; }
  const AffineElement& omega(int index) const { return omegas_[static_cast<std::size_t>(index)]; }
  int omega_index_of_class(const Weight& lambda) const;
  int omega_index(const AffineElement& omega) const;
  // The representative weight of the class: a sum of minuscule fundamental weights.
  const Weight& omega_class_weight(int index) const { return omega_class_weights_[static_cast<std::size_t>(index)]; }
  std::string omega_name(int index) const;
  int parse_omega(std::string_view name) const;
  int omega_multiply(int a, int b) const;
  int omega_inverse(int a) const;
  // omega * s * omega^{-1}, which is again a simple reflection.
  GeneratorId omega_conjugate(int omega, GeneratorId s) const;

  bool in_coxeter_part(const AffineElement& x) const { return rs_.in_root_lattice(x.translation); }
  OmegaDecomposition omega_decompose(const AffineElement& x) const;

  // x = omega * s_{i1} ... s_{ik} with k = l(x), by greedy right descents (smallest id first).
  ReducedWord reduced_word(const AffineElement& x) const;
  AffineElement evaluate(const ReducedWord& w) const;
  AffineElement evaluate(int omega, const std::vector<GeneratorId>& word) const;
  std::string word_string(const ReducedWord& w) const;

  AffineElement right_multiply(const AffineElement& x, GeneratorId s) const { return multiply(x, generator(s)); }
  AffineElement left_multiply(GeneratorId s, const AffineElement& x) const { return multiply(generator(s), x); }

  // Bruhat order extended over Omega componentwise: x <= y iff their Omega
  // parts agree and the Coxeter parts compare in W_aff^Cox.
  bool bruhat_leq(const AffineElement& x, const AffineElement& y) const;

  // The shortest element of W t_lambda and delta(lambda).
  WLambda w_lambda(const Weight& lambda) const;
  // lambda <= mu iff w_lambda <= w_mu in the Bruhat order.
  bool order_leq(const Weight& lambda, const Weight& mu) const;

  std::string element_string(const AffineElement& x) const;

 private:
  bool coxeter_leq(AffineElement u, AffineElement v) const;

  RootSystem rs_;
  std::vector<AffineElement> generators_;
  std::vector<int> affine_roots_;
  std::vector<AffineElement> omegas_;
  std::vector<Weight> omega_class_weights_;
  std::vector<std::vector<GeneratorId>> omega_conjugation_;  // [omega][s]
};

}  // namespace exotic
