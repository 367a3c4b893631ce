#pragma once

// The right H-module K with basis {m_lambda}, lambda in X, where
// m_lambda = m_0 * T_{w_lambda} and m_0 is fixed by T_w (w finite) up to v^{-l(w)}.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "exotic/hecke.hpp"

namespace exotic {

class KClass {
 public:
  using Terms = std::map<Weight, LaurentPoly>;

  KClass() = default;
  KClass(const Weight& lambda, LaurentPoly coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Weight& lambda) const;
  void add_term(const Weight& lambda, const LaurentPoly& coeff);
  // True if every coefficient lies in Z>=0[v, v^-1].
  bool is_nonnegative() const;

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(const LaurentPoly& c, const KClass& x);

  bool operator==(const KClass&) const = default;

  // "m[1] + v*m[-1]", highest weight first.
  std::string str() const;

 private:
  Terms terms_;
};

// Weight multiplicities of a finite-dimensional module.
using WeightMultiplicities = std::map<Weight, Int>;

class KModule {
 public:
  explicit KModule(std::shared_ptr<const HeckeAlgebra> hecke);

  const HeckeAlgebra& hecke() const { return *hecke_; }
  const AffineWeylGroup& group() const { return hecke_->group(); }
  const RootSystem& roots() const { return hecke_->group().roots(); }

  KClass basis(const Weight& lambda) const { return KClass(lambda, LaurentPoly(1)); }
  KClass origin() const { return basis(roots().zero()); }

  // Memoized w_lambda.
  WLambda w_lambda(const Weight& lambda) const;

  KClass act_simple(const KClass& c, GeneratorId s) const;
  KClass act_simple_inverse(const KClass& c, GeneratorId s) const;
  KClass act_omega(const KClass& c, int omega, int exponent = 1) const;
  KClass act_letter(const KClass& c, const BraidLetter& letter) const;
  KClass act_word(KClass c, const BraidWord& word) const;
  KClass act_hecke(const KClass& c, const HeckeElement& x) const;

  // m_lambda, computed as m_0 * T_{w_lambda}.
  KClass nabla_class(const Weight& lambda) const;
  // m_0 * (T_{w_lambda^-1})^-1
  KClass delta_class(const Weight& lambda) const;
  // m_0 * theta_lambda
  KClass line_bundle_class(const Weight& lambda) const;
  // m_0 T_omega (T_{s_r} + v) ... (T_{s_1} + v) for seq = (s_1, ..., s_r).
  // With reversed = true the factors are applied in the order s_1, ..., s_r.
  KClass bott_samelson_class(int omega, const std::vector<GeneratorId>& seq, bool reversed = false) const;
  // c * sum_mu dim V_mu theta_mu
  KClass tensor_class(const WeightMultiplicities& weights, const KClass& c) const;

 private:
  std::shared_ptr<const HeckeAlgebra> hecke_;
  mutable std::mutex memo_mutex_;
  mutable std::map<Weight, WLambda> wl_memo_;
};

}  // namespace exotic
