#include "exotic/tiltmult.hpp"

#include <set>
#include <stdexcept>

namespace exotic {

TiltMult::TiltMult(std::shared_ptr<const KModule> kmod, std::shared_ptr<const CharacterRing> chars)
    : kmod_(std::move(kmod)), chars_(std::move(chars)) {
  if (!kmod_ || !chars_) throw std::invalid_argument("null module or character ring");
}

LaurentPoly TiltMult::gamma_graded_char(const Weight& lambda, const Weight& nu) const {
  const RootSystem& rs = roots();
  if (!rs.is_dominant(lambda) || !rs.is_dominant(nu)) throw std::invalid_argument("gamma_graded_char needs dominant weights");
  return chars_->lusztig_q(nu, lambda).substitute_power(2);
}

LaurentPoly TiltMult::std_mult(const CharacterMultiset& V, const Weight& mu) const {
  if (V.basis != CharacterBasis::Weyl) throw std::invalid_argument("std_mult expects a Weyl-basis character");
  DominantRep d = roots().dominant_rep(mu);
  LaurentPoly sum;
  for (const auto& [nu, c] : V.mults) sum += LaurentPoly(c) * chars_->lusztig_q(nu, d.dominant).substitute_power(-2);
  return sum.shifted(-d.delta);
}

LaurentPoly TiltMult::costd_mult(const CharacterMultiset& V, const Weight& mu) const {
  if (V.basis != CharacterBasis::Good) throw std::invalid_argument("costd_mult expects a good-basis character");
  const RootSystem& rs = roots();
  const WeylElement w0 = rs.longest_element();
  const int delta = rs.dominant_rep(mu).delta;
  const Weight target = rs.dom(-mu);
  LaurentPoly sum;
  // (V : N(-w0 nu)) is nonzero exactly for nu = -w0 kappa with kappa in the support.
  for (const auto& [kappa, c] : V.mults) {
    Weight nu = -w0.apply(kappa);
    sum += LaurentPoly(c) * chars_->lusztig_q(nu, target).substitute_power(2);
  }
  return sum.shifted(delta);
}

std::vector<Weight> TiltMult::support(const CharacterMultiset& V) const {
  std::set<Weight> out;
  for (const auto& [nu, c] : V.mults)
    for (const auto& mu : roots().conv_set(nu)) out.insert(mu);
  return {out.begin(), out.end()};
}

KClass TiltMult::costd_class(const CharacterMultiset& V) const {
  KClass r;
  for (const auto& mu : support(V)) r.add_term(mu, costd_mult(V, mu));
  return r;
}

KClass TiltMult::std_class(const CharacterMultiset& V) const {
  KClass r;
  for (const auto& mu : support(V)) {
    LaurentPoly c = std_mult(V, mu);
    if (!c.is_zero()) r += c * kmod_->delta_class(mu);
  }
  return r;
}

KClass TiltMult::dominant_tilting_class(const Weight& lambda, const std::optional<CharacterMultiset>& tilt_char) const {
  if (!roots().is_dominant(lambda)) throw std::invalid_argument("dominant_tilting_class needs a dominant weight");
  CharacterMultiset tc;
  if (tilt_char) {
    if (tilt_char->basis != CharacterBasis::Weyl) throw std::invalid_argument("tilting character must be in the Weyl basis");
    tc = *tilt_char;
  } else {
    tc.mults.emplace(lambda, 1);
  }
  CharacterMultiset good = tc;
  good.basis = CharacterBasis::Good;
  KClass cls = costd_class(good);
  KClass check = kmod_->tensor_class(chars_->full_weights(tc), kmod_->origin());
  if (!(cls == check)) throw std::logic_error("costandard formula disagrees with the tensor product class");
  return cls;
}

ReconcileReport TiltMult::reconcile(const CharacterMultiset& V) const {
  ReconcileReport rep;
  CharacterMultiset good = V;
  good.basis = CharacterBasis::Good;
  rep.from_tensor = kmod_->tensor_class(chars_->full_weights(V), kmod_->origin());
  rep.from_formula = costd_class(good);
  std::set<Weight> keys;
  for (const auto& [w, c] : rep.from_tensor.terms()) keys.insert(w);
  for (const auto& [w, c] : rep.from_formula.terms()) keys.insert(w);
  for (const auto& w : keys) {
    LaurentPoly a = rep.from_tensor.coeff(w), b = rep.from_formula.coeff(w);
    if (a == b) continue;
    rep.match = false;
    rep.diffs.push_back({w, a, b});
  }
  return rep;
}

}  // namespace exotic
