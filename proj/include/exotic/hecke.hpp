#pragma once

// The extended affine Hecke algebra H over Z[v, v^-1] in the standard basis
// {T_w}. Conventions: (T_s - v^-1)(T_s + v) = 0, so
//   T_s^-1 = T_s + (v - v^-1),
//   T_x T_s = T_{xs}                        if l(xs) > l(x),
//   T_x T_s = T_{xs} + (v^-1 - v) T_x       if l(xs) < l(x),
//   T_x T_omega = T_{x omega}               for omega of length zero.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "exotic/affweyl.hpp"
#include "exotic/laurent.hpp"

namespace exotic {

struct BraidLetter {
  enum class Kind { Simple, Omega };
  Kind kind = Kind::Simple;
  int index = 0;     // GeneratorId for Simple, Omega index for Omega
  int exponent = 1;  // +1 or -1

  bool operator==(const BraidLetter&) const = default;
};

// A word in the generators T_s^{+-1}, T_omega^{+-1}. Adjacent g g^{-1} pairs
// cancel as letters are appended.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(std::initializer_list<BraidLetter> letters);

  static BraidLetter simple(GeneratorId s, int exponent = 1) { return {BraidLetter::Kind::Simple, s, exponent}; }
  static BraidLetter omega(int index, int exponent = 1) { return {BraidLetter::Kind::Omega, index, exponent}; }

  void push_back(const BraidLetter& letter);
  BraidWord& operator+=(const BraidWord& o);
  friend BraidWord operator+(BraidWord a, const BraidWord& b) { return a += b; }
  BraidWord inverse() const;

  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  bool operator==(const BraidWord&) const = default;

 private:
  std::vector<BraidLetter> letters_;
};

class HeckeElement {
 public:
  using Terms = std::map<AffineElement, LaurentPoly>;

  HeckeElement() = default;
  HeckeElement(const AffineElement& x, LaurentPoly coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const AffineElement& x) const;
  void add_term(const AffineElement& x, const LaurentPoly& coeff);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& x);

  bool operator==(const HeckeElement&) const = default;

 private:
  Terms terms_;
};

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const AffineWeylGroup> group);

  const AffineWeylGroup& group() const { return *group_; }
  std::shared_ptr<const AffineWeylGroup> group_ptr() const { return group_; }

  HeckeElement one() const;
  HeckeElement basis(const AffineElement& x) const;
  HeckeElement basis(const ReducedWord& w) const { return basis(group_->evaluate(w)); }

  // Right multiplication by a single generator letter.
  HeckeElement right_letter(const HeckeElement& x, const BraidLetter& letter) const;
  HeckeElement right_word(HeckeElement x, const BraidWord& word) const;
  HeckeElement multiply(const HeckeElement& x, const HeckeElement& y) const;

  // Image of a braid word in H, multiplied out from T_e.
  HeckeElement evaluate(const BraidWord& word) const { return right_word(one(), word); }
  // Inverse of a generator: T_s^-1 = T_s + (v - v^-1), T_omega^-1 = T_{omega^-1}.
  HeckeElement inverse_generator(const BraidLetter& letter) const;

  // Memoized reduced word of x.
  ReducedWord reduced_word(const AffineElement& x) const;
  // T_x as a positive word T_omega T_{s1} ... T_{sk}.
  BraidWord word_of(const AffineElement& x) const;
  // (T_x)^{-1} = T_{sk}^-1 ... T_{s1}^-1 T_omega^-1.
  BraidWord inverse_word_of(const AffineElement& x) const;

  // theta_lambda = T_{t_mu} (T_{t_nu})^{-1} with nu_i = max(0, -lambda_i), mu = lambda + nu.
  BraidWord theta_word(const Weight& lambda) const;
  // Same with an explicit decomposition lambda = mu - nu, mu and nu dominant.
  BraidWord theta_word(const Weight& mu, const Weight& nu) const;
  HeckeElement theta(const Weight& lambda) const;

  // Terms ordered by (length, Omega index, reduced word).
  std::vector<std::pair<ReducedWord, LaurentPoly>> sorted_terms(const HeckeElement& x) const;
  // "T[s0 s1] * (v - v^-1) + T[e]"
  std::string str(const HeckeElement& x) const;

 private:
  std::shared_ptr<const AffineWeylGroup> group_;
  mutable std::mutex memo_mutex_;
  mutable std::map<AffineElement, ReducedWord> word_memo_;
  mutable std::map<Weight, HeckeElement> theta_memo_;
};

struct VerificationReport {
  bool ok = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // first few counterexamples

  void record(bool passed, const std::string& what);
  void merge(const VerificationReport& other);
};

// Quadratic relations for all simple reflections, braid relations for every
// pair of simple reflections generating a finite dihedral group, relation
// T_v T_w = T_{vw} on the finite Weyl group, and Omega-conjugation of simple
// reflections.
VerificationReport verify_hecke_relations(const HeckeAlgebra& alg);

// The relations of the Bernstein presentation for all weights in the box of
// the given radius:
//   theta_l theta_m = theta_{l+m},
//   T_s theta_l = theta_l T_s        if <l, a^vee> = 0,
//   theta_l = T_s theta_{l-a} T_s    if <l, a^vee> = 1,
// plus T_v T_w = T_{vw} for length-additive pairs of the finite Weyl group.
VerificationReport verify_bernstein(const HeckeAlgebra& alg, int radius);

// T_{t_l} = T_{w^-1} theta_{w l} (T_{w^-1})^-1 for every l in the box, with
// w of minimal length such that w l is dominant.
VerificationReport verify_t_translation_conjugation(const HeckeAlgebra& alg, int radius);

}  // namespace exotic
