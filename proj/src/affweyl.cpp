#include "exotic/affweyl.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace exotic {

AffineWeylGroup::AffineWeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  const int n = rs_.rank();
  for (int i = 0; i < n; ++i) generators_.push_back(finite(rs_.simple_reflection(i)));

  // Affine generators: per component, the unique s_gamma t_{-gamma} of length one.
  const auto& roots = rs_.positive_roots();
  for (std::size_t k = 0; k < rs_.components().size(); ++k) {
    const auto& comp = rs_.components()[k];
    int found = -1;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      if (roots[r].root_coords[static_cast<std::size_t>(comp.nodes.front())] == 0) continue;
      AffineElement cand{rs_.reflection(static_cast<int>(r)), -roots[r].weight};
      if (length(cand) != 1) continue;
      if (found >= 0) throw std::logic_error("several length-one affine reflections in component " + std::to_string(k));
      found = static_cast<int>(r);
      generators_.push_back(std::move(cand));
    }
    if (found < 0) throw std::logic_error("affine generator search failed for component " + std::to_string(k));
    affine_roots_.push_back(found);
  }

  // Omega. For a minuscule fundamental weight w_j, the element u t_{-w_j} has
  // length zero when u sends exactly the positive roots a with <w_j, a^vee> = 1
  // to negative roots; u is the minimal element making rho - N w_j dominant.
  Int tallest = 0;
  for (std::size_t r = 0; r < roots.size(); ++r) tallest = std::max(tallest, rs_.pairing(rs_.rho(), static_cast<int>(r)));
  std::vector<AffineElement> seeds;
  for (int j = 0; j < n; ++j) {
    if (!rs_.is_minuscule(j)) continue;
    Weight xi = rs_.rho() - (tallest + 1) * rs_.fundamental(j);
    AffineElement om{rs_.dominant_rep(xi).element, -rs_.fundamental(j)};
    if (length(om) != 0) throw std::logic_error("length-zero element construction failed");
    seeds.push_back(std::move(om));
  }
  omegas_.push_back(identity());
  for (std::size_t head = 0; head < omegas_.size(); ++head) {
    for (const auto& s : seeds) {
      AffineElement next = multiply(omegas_[head], s);
      if (std::find(omegas_.begin(), omegas_.end(), next) == omegas_.end()) omegas_.push_back(std::move(next));
    }
  }

  // Class representatives: sums of at most one minuscule weight per component.
  std::vector<Weight> reps{rs_.zero()};
  for (const auto& comp : rs_.components()) {
    std::vector<Weight> grown;
    for (const auto& base : reps) {
      grown.push_back(base);
      for (int j : comp.nodes)
        if (rs_.is_minuscule(j)) grown.push_back(base + rs_.fundamental(j));
    }
    reps = std::move(grown);
  }
  if (reps.size() != omegas_.size()) throw std::logic_error("|Omega| does not match |X/ZPhi|");
  std::vector<std::pair<Weight, AffineElement>> tagged;
  for (auto& om : omegas_) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](const Weight& w) { return rs_.same_coset(w, om.translation); });
    if (it == reps.end()) throw std::logic_error("Omega element without class representative");
    tagged.emplace_back(*it, om);
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  omegas_.clear();
  for (auto& [w, om] : tagged) {
    omega_class_weights_.push_back(w);
    omegas_.push_back(om);
  }

  omega_conjugation_.assign(omegas_.size(), std::vector<GeneratorId>(generators_.size(), -1));
  for (std::size_t o = 0; o < omegas_.size(); ++o) {
    for (std::size_t s = 0; s < generators_.size(); ++s) {
      AffineElement c = multiply(multiply(omegas_[o], generators_[s]), inverse(omegas_[o]));
      auto it = std::find(generators_.begin(), generators_.end(), c);
      if (it == generators_.end()) throw std::logic_error("Omega conjugation does not preserve the simple reflections");
      omega_conjugation_[o][s] = static_cast<GeneratorId>(it - generators_.begin());
    }
  }
}

std::shared_ptr<const AffineWeylGroup> AffineWeylGroup::make(std::string_view spec) {
  return std::make_shared<const AffineWeylGroup>(RootSystem::build(spec));
}

AffineElement AffineWeylGroup::identity() const { return {rs_.identity(), rs_.zero()}; }

AffineElement AffineWeylGroup::translation(const Weight& lambda) const { return {rs_.identity(), lambda}; }

AffineElement AffineWeylGroup::finite(const WeylElement& w) const { return {w, rs_.zero()}; }

AffineElement AffineWeylGroup::multiply(const AffineElement& a, const AffineElement& b) const {
  // (w t_l)(w' t_m) = (w w') t_{w'^{-1} l + m}
  return {rs_.compose(a.finite, b.finite), b.finite.apply_inverse(a.translation) + b.translation};
}

AffineElement AffineWeylGroup::inverse(const AffineElement& a) const {
  return {rs_.inverse(a.finite), -a.finite.apply(a.translation)};
}

int AffineWeylGroup::length(const AffineElement& x) const {
  const auto& roots = rs_.positive_roots();
  const auto& inv = x.finite.inversions();
  Int total = 0;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    Int p = rs_.pairing(x.translation, roots[k].coroot_coords);
    total += inv.test(k) ? std::llabs(1 + p) : std::llabs(p);
  }
  return static_cast<int>(total);
}

std::string AffineWeylGroup::generator_name(GeneratorId s) const {
  if (s < 0 || s >= num_generators()) throw std::out_of_range("generator id out of range");
  if (s < rank()) return "s" + std::to_string(s + 1);
  if (rs_.components().size() == 1) return "s0";
  return "s0_" + std::to_string(s - rank() + 1);
}

GeneratorId AffineWeylGroup::parse_generator(std::string_view name) const {
  auto bad = [&] { return std::invalid_argument("unknown simple reflection '" + std::string(name) + "'"); };
  if (name.size() < 2 || name[0] != 's') throw bad();
  auto parse_int = [&](std::string_view t) {
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || p != t.data() + t.size()) throw bad();
    return v;
  };
  std::string_view rest = name.substr(1);
  if (rest.size() > 2 && rest.substr(0, 2) == "0_") {
    int k = parse_int(rest.substr(2));
    if (k < 1 || k > static_cast<int>(rs_.components().size())) throw bad();
    return rank() + k - 1;
  }
  int i = parse_int(rest);
  if (i == 0) {
    if (rs_.components().size() != 1) throw std::invalid_argument("ambiguous 's0': use s0_k for component k");
    return rank();
  }
  if (i < 1 || i > rank()) throw bad();
  return i - 1;
}

int AffineWeylGroup::omega_index_of_class(const Weight& lambda) const {
  for (std::size_t i = 0; i < omega_class_weights_.size(); ++i)
    if (rs_.same_coset(omega_class_weights_[i], lambda)) return static_cast<int>(i);
  throw std::logic_error("weight class not represented in Omega");
}

int AffineWeylGroup::omega_index(const AffineElement& omega) const {
  auto it = std::find(omegas_.begin(), omegas_.end(), omega);
  if (it == omegas_.end()) throw std::invalid_argument("element is not of length zero");
  return static_cast<int>(it - omegas_.begin());
}

std::string AffineWeylGroup::omega_name(int index) const {
  if (index == 0) return "e";
  if (omegas_.size() == 2) return "omega";
  const Weight& w = omega_class_weight(index);
  if (rs_.components().size() == 1) {
    for (int j = 0; j < rank(); ++j)
      if (w[j] == 1) return "omega" + std::to_string(j + 1);
  }
  return "omega" + w.str();
}

int AffineWeylGroup::parse_omega(std::string_view name) const {
  if (name == "e") return 0;
  if (name.substr(0, 5) != "omega") throw std::invalid_argument("unknown Omega element '" + std::string(name) + "'");
  std::string_view rest = name.substr(5);
  if (rest.empty()) {
    if (omegas_.size() != 2)
      throw std::invalid_argument("'omega' is ambiguous here; use omega<j> or omega[...]");
    return 1;
  }
  if (rest.front() == '[') {
    Weight w = parse_weight(rest);
    if (w.rank() != rank()) throw std::invalid_argument("weight rank mismatch in '" + std::string(name) + "'");
    return omega_index_of_class(w);
  }
  int j = 0;
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), j);
  if (ec != std::errc() || p != rest.data() + rest.size() || j < 1 || j > rank())
    throw std::invalid_argument("unknown Omega element '" + std::string(name) + "'");
  return omega_index_of_class(rs_.fundamental(j - 1));
}

int AffineWeylGroup::omega_multiply(int a, int b) const { return omega_index(multiply(omega(a), omega(b))); }

int AffineWeylGroup::omega_inverse(int a) const { return omega_index(inverse(omega(a))); }

GeneratorId AffineWeylGroup::omega_conjugate(int omega, GeneratorId s) const {
  return omega_conjugation_[static_cast<std::size_t>(omega)][static_cast<std::size_t>(s)];
}

OmegaDecomposition AffineWeylGroup::omega_decompose(const AffineElement& x) const {
  int idx = omega_index_of_class(x.translation);
  AffineElement u = multiply(inverse(omega(idx)), x);
  if (!in_coxeter_part(u)) throw std::logic_error("Omega decomposition left the Coxeter part");
  return {idx, std::move(u)};
}

ReducedWord AffineWeylGroup::reduced_word(const AffineElement& x) const {
  ReducedWord out;
  AffineElement u = x;
  int len = length(u);
  while (len > 0) {
    bool found = false;
    for (GeneratorId s = 0; s < num_generators(); ++s) {
      AffineElement us = right_multiply(u, s);
      int l2 = length(us);
      if (l2 < len) {
        out.word.push_back(s);
        u = std::move(us);
        len = l2;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no right descent for an element of positive length");
  }
  out.omega = omega_index(u);
  std::reverse(out.word.begin(), out.word.end());
  return out;
}

AffineElement AffineWeylGroup::evaluate(const ReducedWord& w) const { return evaluate(w.omega, w.word); }

AffineElement AffineWeylGroup::evaluate(int omega_idx, const std::vector<GeneratorId>& word) const {
  AffineElement x = omega(omega_idx);
  for (GeneratorId s : word) x = right_multiply(x, s);
  return x;
}

std::string AffineWeylGroup::word_string(const ReducedWord& w) const {
  std::string out;
  if (w.omega != 0) out = omega_name(w.omega);
  for (GeneratorId s : w.word) {
    if (!out.empty()) out += ' ';
    out += generator_name(s);
  }
  return out.empty() ? "e" : out;
}

std::string AffineWeylGroup::element_string(const AffineElement& x) const { return word_string(reduced_word(x)); }

bool AffineWeylGroup::bruhat_leq(const AffineElement& x, const AffineElement& y) const {
  auto dx = omega_decompose(x);
  auto dy = omega_decompose(y);
  if (dx.omega != dy.omega) return false;
  return coxeter_leq(std::move(dx.coxeter_part), std::move(dy.coxeter_part));
}

bool AffineWeylGroup::coxeter_leq(AffineElement u, AffineElement v) const {
  // Lifting property: for a left descent s of v,
  //   su < u  =>  (u <= v  iff  su <= sv)
  //   su > u  =>  (u <= v  iff  u <= sv)
  int lu = length(u);
  int lv = length(v);
  while (true) {
    if (lu > lv) return false;
    if (lu == lv) return u == v;
    if (lu == 0) return true;  // u is the identity of the Coxeter part
    bool found = false;
    for (GeneratorId s = 0; s < num_generators(); ++s) {
      AffineElement sv = left_multiply(s, v);
      int lsv = length(sv);
      if (lsv >= lv) continue;
      AffineElement su = left_multiply(s, u);
      int lsu = length(su);
      if (lsu < lu) {
        u = std::move(su);
        lu = lsu;
      }
      v = std::move(sv);
      lv = lsv;
      found = true;
      break;
    }
    if (!found) throw std::logic_error("no left descent for an element of positive length");
  }
}

WLambda AffineWeylGroup::w_lambda(const Weight& lambda) const {
  DominantRep rep = rs_.dominant_rep(lambda);
  AffineElement w{rep.element, lambda};
  const int lw = length(w);
  if (lw != length(translation(lambda)) - rep.delta)
    throw std::logic_error("l(w_lambda) != l(t_lambda) - delta(lambda) for " + lambda.str());
  for (GeneratorId s = 0; s < rank(); ++s)
    if (length(left_multiply(s, w)) < lw)
      throw std::logic_error("w_lambda has a finite left descent for " + lambda.str());
  return {std::move(w), rep.delta};
}

bool AffineWeylGroup::order_leq(const Weight& lambda, const Weight& mu) const {
  if (!rs_.same_coset(lambda, mu)) return false;
  return bruhat_leq(w_lambda(lambda).element, w_lambda(mu).element);
}

}  // namespace exotic
