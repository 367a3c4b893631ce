#include "exotic/charring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace exotic {

std::string basis_name(CharacterBasis b) { return b == CharacterBasis::Weyl ? "Weyl" : "good"; }

CharacterBasis parse_basis(std::string_view name) {
  if (name == "Weyl") return CharacterBasis::Weyl;
  if (name == "good") return CharacterBasis::Good;
  throw std::invalid_argument("unknown character basis: " + std::string(name));
}

CharacterRing::CharacterRing(RootSystem rs) : rs_(std::move(rs)) {
  for (const auto& pr : rs_.positive_roots()) roots_.push_back(pr.root_coords);
}

const std::vector<WeylElement>& CharacterRing::weyl() const {
  std::lock_guard lock(mutex_);
  if (!weyl_) weyl_ = rs_.weyl_group();
  return *weyl_;
}

LaurentPoly CharacterRing::partition_rec(std::size_t k, const std::vector<Int>& r) const {
  if (std::any_of(r.begin(), r.end(), [](Int x) { return x < 0; })) return {};
  if (std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; })) return LaurentPoly(1);
  if (k == 0) return {};
  auto key = std::make_pair(k, r);
  if (auto it = partial_.find(key); it != partial_.end()) return it->second;
  std::vector<Int> rest = r;
  const auto& root = roots_[k - 1];
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= root[i];
  LaurentPoly p = partition_rec(k - 1, r) + LaurentPoly::v(1) * partition_rec(k, rest);
  partial_.emplace(std::move(key), p);
  return p;
}

LaurentPoly CharacterRing::kostant_partition(const Weight& mu) const {
  auto coords = rs_.root_coordinates(mu);
  if (!coords) return {};
  std::lock_guard lock(mutex_);
  if (auto it = table_.find(*coords); it != table_.end()) return it->second;
  LaurentPoly p = partition_rec(roots_.size(), *coords);
  table_.emplace(*coords, p);
  return p;
}

LaurentPoly CharacterRing::lusztig_q(const Weight& lambda, const Weight& mu) const {
  if (!rs_.same_coset(lambda, mu)) return {};
  const Weight lr = lambda + rs_.rho();
  const Weight mr = mu + rs_.rho();
  LaurentPoly total;
  for (const auto& w : weyl()) {
    LaurentPoly p = kostant_partition(w.apply(lr) - mr);
    if (p.is_zero()) continue;
    if (w.length() % 2 == 0) total += p;
    else total -= p;
  }
  return total;
}

const std::map<Weight, Int>& CharacterRing::dominant_mults(const Weight& lambda) const {
  std::lock_guard lock(mutex_);
  if (auto it = freudenthal_.find(lambda); it != freudenthal_.end()) return it->second;
  if (!rs_.is_dominant(lambda)) throw std::invalid_argument("Freudenthal formula needs a dominant weight");

  std::vector<std::pair<Int, Weight>> order;
  for (const auto& mu : rs_.dominant_below(lambda)) order.emplace_back(*rs_.height(lambda - mu), mu);
  std::sort(order.begin(), order.end());

  const Weight two_rho = 2 * rs_.rho();
  std::map<Weight, Int> mult;
  for (const auto& [h, mu] : order) {
    if (h == 0) {
      mult[mu] = 1;
      continue;
    }
    Int num = 0;
    for (const auto& pr : rs_.positive_roots()) {
      for (Int k = 1;; ++k) {
        Weight x = mu + k * pr.weight;
        auto it = mult.find(rs_.dom(x));
        if (it == mult.end()) break;
        num += 2 * it->second * rs_.form_with_root(x, pr.root_coords);
      }
    }
    Int den = rs_.form_with_root(lambda + mu + two_rho, *rs_.root_coordinates(lambda - mu));
    if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion is not integral at " + mu.str());
    mult[mu] = num / den;
  }
  for (auto it = mult.begin(); it != mult.end();) {
    if (it->second == 0) it = mult.erase(it);
    else ++it;
  }
  return freudenthal_.emplace(lambda, std::move(mult)).first->second;
}

Int CharacterRing::freudenthal_mult(const Weight& lambda, const Weight& mu) const {
  const auto& m = dominant_mults(lambda);
  auto it = m.find(rs_.dom(mu));
  return it == m.end() ? 0 : it->second;
}

std::map<Weight, Int> CharacterRing::weights_of(const Weight& lambda) const {
  std::map<Weight, Int> out;
  for (const auto& mu : rs_.conv_set(lambda)) {
    Int m = freudenthal_mult(lambda, mu);
    if (m != 0) out.emplace(mu, m);
  }
  return out;
}

Int CharacterRing::weyl_dimension(const Weight& lambda) const {
  auto gcd128 = [](__int128 a, __int128 b) {
    if (a < 0) a = -a;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  __int128 num = 1, den = 1;
  const Weight lr = lambda + rs_.rho();
  for (const auto& pr : rs_.positive_roots()) {
    num *= rs_.form_with_root(lr, pr.root_coords);
    den *= rs_.form_with_root(rs_.rho(), pr.root_coords);
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  if (den != 1) throw std::logic_error("Weyl dimension is not integral");
  return static_cast<Int>(num);
}

CharacterMultiset CharacterRing::tensor_decompose(const Weight& lambda, const Weight& mu) const {
  if (!rs_.is_dominant(lambda) || !rs_.is_dominant(mu)) throw std::invalid_argument("tensor_decompose needs dominant weights");
  std::map<Weight, Int> acc;
  const Weight lr = lambda + rs_.rho();
  for (const auto& [xi, m] : weights_of(mu)) {
    Weight x = lr + xi;
    if (!rs_.is_regular(x)) continue;
    DominantRep d = rs_.dominant_rep(x);
    acc[d.dominant - rs_.rho()] += d.delta % 2 == 0 ? m : -m;
  }
  CharacterMultiset cm;
  for (const auto& [nu, c] : acc) {
    if (c < 0) throw std::logic_error("negative tensor multiplicity at " + nu.str());
    if (c > 0) cm.mults.emplace(nu, c);
  }
  return cm;
}

std::map<Weight, Int> CharacterRing::full_weights(const CharacterMultiset& cm) const {
  std::map<Weight, Int> out;
  for (const auto& [nu, c] : cm.mults)
    for (const auto& [mu, m] : weights_of(nu)) out[mu] += c * m;
  return out;
}

std::map<std::vector<Int>, LaurentPoly> CharacterRing::partition_table() const {
  std::lock_guard lock(mutex_);
  return table_;
}

void CharacterRing::load_partition_table(const std::map<std::vector<Int>, LaurentPoly>& table) {
  std::lock_guard lock(mutex_);
  for (const auto& [k, p] : table) table_.emplace(k, p);
}

}  // namespace exotic
