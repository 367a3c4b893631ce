#include "exotic/hecke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace exotic {

namespace {

constexpr std::size_t kMaxReportedFailures = 8;

LaurentPoly v_minus_vinv() { return LaurentPoly::v(1) - LaurentPoly::v(-1); }

}  // namespace

BraidWord::BraidWord(std::initializer_list<BraidLetter> letters) {
  for (const auto& l : letters) push_back(l);
}

void BraidWord::push_back(const BraidLetter& letter) {
  if (letter.exponent != 1 && letter.exponent != -1) throw std::invalid_argument("braid letter exponent must be +-1");
  if (!letters_.empty()) {
    const auto& last = letters_.back();
    if (last.kind == letter.kind && last.index == letter.index && last.exponent == -letter.exponent) {
      letters_.pop_back();
      return;
    }
  }
  letters_.push_back(letter);
}

BraidWord& BraidWord::operator+=(const BraidWord& o) {
  for (const auto& l : o.letters_) push_back(l);
  return *this;
}

BraidWord BraidWord::inverse() const {
  BraidWord r;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push_back({it->kind, it->index, -it->exponent});
  return r;
}

HeckeElement::HeckeElement(const AffineElement& x, LaurentPoly coeff) { add_term(x, coeff); }

LaurentPoly HeckeElement::coeff(const AffineElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add_term(const AffineElement& x, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, -c);
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& x) {
  HeckeElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, p] : x.terms_) r.add_term(w, c * p);
  return r;
}

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const AffineWeylGroup> group) : group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("null affine Weyl group");
}

HeckeElement HeckeAlgebra::one() const { return HeckeElement(group_->identity(), LaurentPoly(1)); }

HeckeElement HeckeAlgebra::basis(const AffineElement& x) const { return HeckeElement(x, LaurentPoly(1)); }

HeckeElement HeckeAlgebra::right_letter(const HeckeElement& x, const BraidLetter& letter) const {
  HeckeElement r;
  if (letter.kind == BraidLetter::Kind::Omega) {
    int idx = letter.exponent == 1 ? letter.index : group_->omega_inverse(letter.index);
    const AffineElement& om = group_->omega(idx);
    for (const auto& [w, c] : x.terms()) r.add_term(group_->multiply(w, om), c);
    return r;
  }
  const AffineElement& s = group_->generator(letter.index);
  const LaurentPoly correction = letter.exponent == 1 ? -v_minus_vinv() : v_minus_vinv();
  for (const auto& [w, c] : x.terms()) {
    AffineElement ws = group_->multiply(w, s);
    bool up = group_->length(ws) > group_->length(w);
    r.add_term(ws, c);
    // T_s: extra term when going down; T_s^-1: extra term when going up.
    if (up != (letter.exponent == 1)) r.add_term(w, correction * c);
  }
  return r;
}

HeckeElement HeckeAlgebra::right_word(HeckeElement x, const BraidWord& word) const {
  for (const auto& l : word.letters()) x = right_letter(x, l);
  return x;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& x, const HeckeElement& y) const {
  HeckeElement r;
  for (const auto& [w, c] : y.terms()) r += c * right_word(x, word_of(w));
  return r;
}

HeckeElement HeckeAlgebra::inverse_generator(const BraidLetter& letter) const {
  return evaluate(BraidWord{{letter.kind, letter.index, -letter.exponent}});
}

ReducedWord HeckeAlgebra::reduced_word(const AffineElement& x) const {
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = word_memo_.find(x); it != word_memo_.end()) return it->second;
  }
  ReducedWord w = group_->reduced_word(x);
  std::lock_guard lock(memo_mutex_);
  word_memo_.emplace(x, w);
  return w;
}

BraidWord HeckeAlgebra::word_of(const AffineElement& x) const {
  ReducedWord rw = reduced_word(x);
  BraidWord b;
  if (rw.omega != 0) b.push_back(BraidWord::omega(rw.omega));
  for (GeneratorId s : rw.word) b.push_back(BraidWord::simple(s));
  return b;
}

BraidWord HeckeAlgebra::inverse_word_of(const AffineElement& x) const { return word_of(x).inverse(); }

BraidWord HeckeAlgebra::theta_word(const Weight& lambda) const {
  Weight nu = Weight::zero(lambda.rank());
  for (int i = 0; i < lambda.rank(); ++i) nu[i] = std::max<Int>(0, -lambda[i]);
  return theta_word(lambda + nu, nu);
}

BraidWord HeckeAlgebra::theta_word(const Weight& mu, const Weight& nu) const {
  const RootSystem& rs = group_->roots();
  if (!rs.is_dominant(mu) || !rs.is_dominant(nu)) throw std::invalid_argument("theta_word: parts must be dominant");
  return word_of(group_->translation(mu)) + inverse_word_of(group_->translation(nu));
}

HeckeElement HeckeAlgebra::theta(const Weight& lambda) const {
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = theta_memo_.find(lambda); it != theta_memo_.end()) return it->second;
  }
  HeckeElement t = evaluate(theta_word(lambda));
  std::lock_guard lock(memo_mutex_);
  theta_memo_.emplace(lambda, t);
  return t;
}

std::vector<std::pair<ReducedWord, LaurentPoly>> HeckeAlgebra::sorted_terms(const HeckeElement& x) const {
  std::vector<std::pair<ReducedWord, LaurentPoly>> out;
  out.reserve(x.terms().size());
  for (const auto& [w, c] : x.terms()) out.emplace_back(reduced_word(w), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.word.size() != b.first.word.size()) return a.first.word.size() < b.first.word.size();
    if (a.first.omega != b.first.omega) return a.first.omega < b.first.omega;
    return a.first.word < b.first.word;
  });
  return out;
}

std::string HeckeAlgebra::str(const HeckeElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : sorted_terms(x)) {
    if (!first) out += " + ";
    first = false;
    out += "T[" + group_->word_string(w) + "]";
    if (c == LaurentPoly(1)) continue;
    bool wrap = c.terms().size() > 1 || c.terms().begin()->second < 0;
    out += " * " + (wrap ? "(" + c.str() + ")" : c.str());
  }
  return out;
}

void VerificationReport::record(bool passed, const std::string& what) {
  ++checks;
  if (passed) return;
  ok = false;
  if (failures.size() < kMaxReportedFailures) failures.push_back(what);
}

void VerificationReport::merge(const VerificationReport& other) {
  ok = ok && other.ok;
  checks += other.checks;
  for (const auto& f : other.failures)
    if (failures.size() < kMaxReportedFailures) failures.push_back(f);
}

namespace {

// Order of s * t in the group, or 0 if larger than the bound.
int dihedral_order(const AffineWeylGroup& g, GeneratorId s, GeneratorId t, int bound = 12) {
  AffineElement st = g.multiply(g.generator(s), g.generator(t));
  AffineElement p = st;
  for (int k = 1; k <= bound; ++k) {
    if (p == g.identity()) return k;
    p = g.multiply(p, st);
  }
  return 0;
}

void check_finite_products(const HeckeAlgebra& alg, VerificationReport& rep) {
  const AffineWeylGroup& g = alg.group();
  const RootSystem& rs = g.roots();
  if (rs.weyl_group_order() > 400) return;
  auto W = rs.weyl_group();
  for (const auto& a : W)
    for (const auto& b : W) {
      WeylElement ab = rs.compose(a, b);
      if (ab.length() != a.length() + b.length()) continue;
      HeckeElement lhs = alg.multiply(alg.basis(g.finite(a)), alg.basis(g.finite(b)));
      rep.record(lhs == alg.basis(g.finite(ab)), "T_v T_w = T_vw fails for v=" + alg.str(alg.basis(g.finite(a))) +
                                                    " w=" + alg.str(alg.basis(g.finite(b))));
    }
}

}  // namespace

VerificationReport verify_hecke_relations(const HeckeAlgebra& alg) {
  VerificationReport rep;
  const AffineWeylGroup& g = alg.group();
  const int n = g.num_generators();
  const LaurentPoly vinv = LaurentPoly::v(-1), v = LaurentPoly::v(1);
  for (GeneratorId s = 0; s < n; ++s) {
    HeckeElement ts = alg.basis(g.generator(s));
    HeckeElement left = ts - vinv * alg.one();
    HeckeElement right = ts + v * alg.one();
    rep.record(alg.multiply(left, right).is_zero(), "quadratic relation fails for " + g.generator_name(s));
  }
  for (GeneratorId s = 0; s < n; ++s)
    for (GeneratorId t = s + 1; t < n; ++t) {
      int m = dihedral_order(g, s, t);
      if (m == 0) continue;
      BraidWord a, b;
      for (int k = 0; k < m; ++k) {
        a.push_back(BraidWord::simple(k % 2 == 0 ? s : t));
        b.push_back(BraidWord::simple(k % 2 == 0 ? t : s));
      }
      rep.record(alg.evaluate(a) == alg.evaluate(b),
                 "braid relation fails for " + g.generator_name(s) + ", " + g.generator_name(t));
    }
  for (int om = 1; om < static_cast<int>(g.omegas().size()); ++om)
    for (GeneratorId s = 0; s < n; ++s) {
      BraidWord w{BraidWord::omega(om), BraidWord::simple(s), BraidWord::omega(om, -1)};
      GeneratorId s2 = g.omega_conjugate(om, s);
      rep.record(alg.evaluate(w) == alg.basis(g.generator(s2)),
                 "omega conjugation fails for " + g.omega_name(om) + ", " + g.generator_name(s));
    }
  check_finite_products(alg, rep);
  return rep;
}

VerificationReport verify_bernstein(const HeckeAlgebra& alg, int radius) {
  VerificationReport rep;
  const AffineWeylGroup& g = alg.group();
  const RootSystem& rs = g.roots();
  auto box = weight_box(rs.rank(), -radius, radius);

  for (const auto& l : box)
    for (const auto& m : box) {
      HeckeElement lhs = alg.right_word(alg.theta(l), alg.theta_word(m));
      rep.record(lhs == alg.theta(l + m), "theta_l theta_m != theta_{l+m} for l=" + l.str() + " m=" + m.str());
    }

  for (const auto& l : box) {
    HeckeElement th = alg.theta(l);
    for (int i = 0; i < rs.rank(); ++i) {
      BraidWord si{BraidWord::simple(i)};
      if (l[i] == 0) {
        HeckeElement lhs = alg.right_word(alg.basis(g.generator(i)), alg.theta_word(l));
        HeckeElement rhs = alg.right_word(th, si);
        rep.record(lhs == rhs, "T_s theta_l != theta_l T_s for l=" + l.str() + " s=" + g.generator_name(i));
      } else if (l[i] == 1) {
        Weight prev = l - rs.simple_roots()[static_cast<std::size_t>(i)];
        BraidWord w = si + alg.theta_word(prev) + si;
        rep.record(th == alg.evaluate(w), "theta_l != T_s theta_{l-a} T_s for l=" + l.str() + " s=" + g.generator_name(i));
      }
    }
  }
  check_finite_products(alg, rep);
  return rep;
}

VerificationReport verify_t_translation_conjugation(const HeckeAlgebra& alg, int radius) {
  VerificationReport rep;
  const AffineWeylGroup& g = alg.group();
  const RootSystem& rs = g.roots();
  for (const auto& l : weight_box(rs.rank(), -radius, radius)) {
    DominantRep d = rs.dominant_rep(l);
    AffineElement winv = g.finite(rs.inverse(d.element));
    BraidWord w = alg.word_of(winv) + alg.theta_word(d.dominant) + alg.inverse_word_of(winv);
    rep.record(alg.evaluate(w) == alg.basis(g.translation(l)), "T_{t_l} conjugation fails for l=" + l.str());
  }
  return rep;
}

}  // namespace exotic
