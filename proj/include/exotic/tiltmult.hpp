#pragma once

// Graded multiplicity formulas for V (x) O on the Springer resolution: graded
// characters of global sections of line bundles, standard and costandard
// filtration multiplicities, dominant tilting classes, and a reconciliation
// of the costandard formula with the braid-group action on K.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exotic/charring.hpp"
#include "exotic/kmodule.hpp"

namespace exotic {

struct ReconcileDiff {
  Weight weight;
  LaurentPoly from_tensor;
  LaurentPoly from_formula;
};

struct ReconcileReport {
  bool match = true;
  KClass from_tensor;   // tensor_class(full_weights(V), m_0)
  KClass from_formula;  // sum_mu costd_mult(V, mu) m_mu
  std::vector<ReconcileDiff> diffs;
};

class TiltMult {
 public:
  TiltMult(std::shared_ptr<const KModule> kmod, std::shared_ptr<const CharacterRing> chars);

  const KModule& kmodule() const { return *kmod_; }
  const CharacterRing& characters() const { return *chars_; }
  const RootSystem& roots() const { return chars_->roots(); }

  // sum_k (Gamma(O(lambda))_k : N(nu)) v^k = M_nu^lambda(v^2).
  LaurentPoly gamma_graded_char(const Weight& lambda, const Weight& nu) const;
  // v^{-delta(mu)} sum_nu (V : M(nu)) M_nu^{dom mu}(v^{-2}); V in the Weyl basis.
  LaurentPoly std_mult(const CharacterMultiset& V, const Weight& mu) const;
  // v^{delta(mu)} sum_nu (V : N(-w0 nu)) M_nu^{dom(-mu)}(v^2); V in the good basis.
  LaurentPoly costd_mult(const CharacterMultiset& V, const Weight& mu) const;

  // Weights mu where std_mult / costd_mult can be nonzero.
  std::vector<Weight> support(const CharacterMultiset& V) const;

  // sum_mu costd_mult(V, mu) m_mu
  KClass costd_class(const CharacterMultiset& V) const;
  // sum_mu std_mult(V, mu) delta_class(mu)
  KClass std_class(const CharacterMultiset& V) const;

  // Class of T(lambda) (x) O. tilt_char defaults to {M(lambda): 1} and must be
  // in the Weyl basis. Throws std::logic_error if the formula disagrees with
  // the tensor product computed in K.
  KClass dominant_tilting_class(const Weight& lambda, const std::optional<CharacterMultiset>& tilt_char = {}) const;

  ReconcileReport reconcile(const CharacterMultiset& V) const;

 private:
  std::shared_ptr<const KModule> kmod_;
  std::shared_ptr<const CharacterRing> chars_;
};

}  // namespace exotic
