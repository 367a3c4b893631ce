#include "exotic/kmodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace exotic {

KClass::KClass(const Weight& lambda, LaurentPoly coeff) { add_term(lambda, coeff); }

LaurentPoly KClass::coeff(const Weight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void KClass::add_term(const Weight& lambda, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

bool KClass::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_nonnegative(); });
}

KClass& KClass::operator+=(const KClass& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

KClass operator*(const LaurentPoly& c, const KClass& x) {
  KClass r;
  if (c.is_zero()) return r;
  for (const auto& [w, p] : x.terms_) r.add_term(w, c * p);
  return r;
}

std::string KClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    LaurentPoly c = it->second;
    bool negative = c.terms().size() == 1 && c.terms().begin()->second < 0;
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    first = false;
    if (negative) c = -c;
    if (!(c == LaurentPoly(1))) out += c.str_factor() + "*";
    out += "m" + it->first.str();
  }
  return out;
}

KModule::KModule(std::shared_ptr<const HeckeAlgebra> hecke) : hecke_(std::move(hecke)) {
  if (!hecke_) throw std::invalid_argument("null Hecke algebra");
}

WLambda KModule::w_lambda(const Weight& lambda) const {
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = wl_memo_.find(lambda); it != wl_memo_.end()) return it->second;
  }
  WLambda w = group().w_lambda(lambda);
  std::lock_guard lock(memo_mutex_);
  wl_memo_.emplace(lambda, w);
  return w;
}

KClass KModule::act_simple(const KClass& c, GeneratorId s) const {
  const AffineWeylGroup& g = group();
  const LaurentPoly vinv = LaurentPoly::v(-1);
  const LaurentPoly down = vinv - LaurentPoly::v(1);
  KClass r;
  for (const auto& [lambda, coeff] : c.terms()) {
    WLambda wl = w_lambda(lambda);
    AffineElement u = g.right_multiply(wl.element, s);
    const Weight& mu = u.translation;
    if (mu == lambda) {
      r.add_term(lambda, vinv * coeff);
      continue;
    }
#ifndef NDEBUG
    if (!(w_lambda(mu).element == u)) throw std::logic_error("w_lambda * s is not minimal in its coset");
#endif
    r.add_term(mu, coeff);
    if (g.length(u) < g.length(wl.element)) r.add_term(lambda, down * coeff);
  }
  return r;
}

KClass KModule::act_simple_inverse(const KClass& c, GeneratorId s) const {
  return act_simple(c, s) + (LaurentPoly::v(1) - LaurentPoly::v(-1)) * c;
}

KClass KModule::act_omega(const KClass& c, int omega, int exponent) const {
  const AffineWeylGroup& g = group();
  const AffineElement& om = g.omega(exponent == 1 ? omega : g.omega_inverse(omega));
  KClass r;
  for (const auto& [lambda, coeff] : c.terms())
    r.add_term(g.multiply(w_lambda(lambda).element, om).translation, coeff);
  return r;
}

KClass KModule::act_letter(const KClass& c, const BraidLetter& letter) const {
  if (letter.kind == BraidLetter::Kind::Omega) return act_omega(c, letter.index, letter.exponent);
  return letter.exponent == 1 ? act_simple(c, letter.index) : act_simple_inverse(c, letter.index);
}

KClass KModule::act_word(KClass c, const BraidWord& word) const {
  for (const auto& l : word.letters()) c = act_letter(c, l);
  return c;
}

KClass KModule::act_hecke(const KClass& c, const HeckeElement& x) const {
  KClass r;
  for (const auto& [w, coeff] : x.terms()) r += coeff * act_word(c, hecke_->word_of(w));
  return r;
}

KClass KModule::nabla_class(const Weight& lambda) const {
  KClass r = act_word(origin(), hecke_->word_of(w_lambda(lambda).element));
  if (!(r == basis(lambda))) throw std::logic_error("m_0 T_{w_lambda} != m_lambda for " + lambda.str());
  return r;
}

KClass KModule::delta_class(const Weight& lambda) const {
  AffineElement winv = group().inverse(w_lambda(lambda).element);
  return act_word(origin(), hecke_->inverse_word_of(winv));
}

KClass KModule::line_bundle_class(const Weight& lambda) const {
  return act_word(origin(), hecke_->theta_word(lambda));
}

KClass KModule::bott_samelson_class(int omega, const std::vector<GeneratorId>& seq, bool reversed) const {
  KClass c = act_omega(origin(), omega);
  const LaurentPoly v = LaurentPoly::v(1);
  auto step = [&](GeneratorId s) { c = act_simple(c, s) + v * c; };
  if (reversed) std::for_each(seq.begin(), seq.end(), step);
  else std::for_each(seq.rbegin(), seq.rend(), step);
  return c;
}

KClass KModule::tensor_class(const WeightMultiplicities& weights, const KClass& c) const {
  KClass r;
  for (const auto& [mu, dim] : weights) {
    if (dim == 0) continue;
    r += LaurentPoly(dim) * act_word(c, hecke_->theta_word(mu));
  }
  return r;
}

}  // namespace exotic
