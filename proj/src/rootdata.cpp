#include "exotic/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace exotic {

// ---------------------------------------------------------------------------
// Weight

Weight& Weight::operator+=(const Weight& o) {
  if (o.c_.size() != c_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.c_.size() != c_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Weight operator*(Int k, Weight a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Int x) { return x == 0; });
}

std::string Weight::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c_[i]);
  }
  out += ']';
  return out;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Int x : w.coords()) h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Weight parse_weight(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("weight must look like [a1,...,ar]: '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<Int> coords;
  if (trim(s).empty()) throw std::invalid_argument("empty weight literal");
  while (true) {
    auto comma = s.find(',');
    std::string_view tok = trim(s.substr(0, comma));
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad weight coordinate '" + std::string(tok) + "'");
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return Weight(std::move(coords));
}

std::vector<Weight> weight_box(int rank, Int lo, Int hi) {
  std::vector<Weight> out;
  if (lo > hi) return out;
  std::vector<Int> cur(static_cast<std::size_t>(rank), lo);
  while (true) {
    out.emplace_back(cur);
    int i = rank - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi) {
      cur[static_cast<std::size_t>(i)] = lo;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// WeylElement

bool WeylElement::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (m_[static_cast<std::size_t>(i * rank_ + j)] != (i == j ? 1 : 0)) return false;
  return true;
}

Weight WeylElement::apply_matrix(const std::vector<Int>& m, const Weight& w) const {
  std::vector<Int> out(static_cast<std::size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i) {
    Int acc = 0;
    for (int j = 0; j < rank_; ++j) acc += m[static_cast<std::size_t>(i * rank_ + j)] * w[j];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return Weight(std::move(out));
}

// ---------------------------------------------------------------------------
// Cartan data

namespace {

struct ComponentSpec {
  char type;
  int rank;
};

std::vector<ComponentSpec> parse_spec(std::string_view spec) {
  std::vector<ComponentSpec> out;
  std::string s(spec);
  if (s.empty()) throw std::invalid_argument("empty root system spec");
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find_first_of("x*", pos);
    std::string part = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.size() < 2) throw std::invalid_argument("unknown root system type '" + std::string(spec) + "'");
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    int n = 0;
    auto [ptr, ec] = std::from_chars(part.data() + 1, part.data() + part.size(), n);
    if (ec != std::errc() || ptr != part.data() + part.size() || n <= 0)
      throw std::invalid_argument("unknown root system type '" + part + "'");
    bool ok = false;
    switch (t) {
      case 'A': ok = n >= 1; break;
      case 'B': ok = n >= 2; break;
      case 'C': ok = n >= 2; break;
      case 'D': ok = n >= 4; break;
      case 'E': ok = n >= 6 && n <= 8; break;
      case 'F': ok = n == 4; break;
      case 'G': ok = n == 2; break;
      default: ok = false;
    }
    if (!ok) throw std::invalid_argument("unknown root system type '" + part + "'");
    out.push_back({t, n});
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

// Cartan matrix of one irreducible component, A(i, j) = <alpha_j, alpha_i^vee>.
std::vector<Int> component_cartan(const ComponentSpec& c) {
  const int n = c.rank;
  std::vector<Int> a(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto link = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
  switch (c.type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      at(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      link(0, 1);
      at(0, 1) = -3;  // alpha_1 short
      break;
    default:
      throw std::invalid_argument("unsupported type");
  }
  return a;
}

std::size_t component_weyl_order(const ComponentSpec& c) {
  auto fact = [](int n) {
    std::size_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::size_t>(i);
    return r;
  };
  switch (c.type) {
    case 'A': return fact(c.rank + 1);
    case 'B':
    case 'C': return (std::size_t{1} << c.rank) * fact(c.rank);
    case 'D': return (std::size_t{1} << (c.rank - 1)) * fact(c.rank);
    case 'E': return c.rank == 6 ? 51840 : c.rank == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

// Exact inverse of a small integer matrix, returned as det * A^{-1}.
void integer_adjugate(const std::vector<Int>& a, int n, std::vector<Int>& adj, Int& det) {
  using I128 = __int128;
  struct Q {
    I128 num, den;
  };
  auto norm = [](Q q) {
    if (q.den < 0) { q.num = -q.num; q.den = -q.den; }
    I128 x = q.num < 0 ? -q.num : q.num, y = q.den;
    while (y) { I128 t = x % y; x = y; y = t; }
    if (x > 1) { q.num /= x; q.den /= x; }
    return q;
  };
  auto sub = [&](Q p, Q q) { return norm({p.num * q.den - q.num * p.den, p.den * q.den}); };
  auto mul = [&](Q p, Q q) { return norm({p.num * q.num, p.den * q.den}); };
  auto divq = [&](Q p, Q q) { return norm({p.num * q.den, p.den * q.num}); };
  std::vector<Q> m(static_cast<std::size_t>(n * 2 * n));
  auto at = [&](int i, int j) -> Q& { return m[static_cast<std::size_t>(i * 2 * n + j)]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j)
      at(i, j) = j < n ? Q{a[static_cast<std::size_t>(i * n + j)], 1} : Q{i == j - n ? 1 : 0, 1};
  Q d{1, 1};
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && at(piv, col).num == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular Cartan matrix");
    if (piv != col) {
      for (int j = 0; j < 2 * n; ++j) std::swap(at(piv, j), at(col, j));
      d.num = -d.num;
    }
    Q p = at(col, col);
    d = mul(d, p);
    for (int j = 0; j < 2 * n; ++j) at(col, j) = divq(at(col, j), p);
    for (int i = 0; i < n; ++i) {
      if (i == col || at(i, col).num == 0) continue;
      Q f = at(i, col);
      for (int j = 0; j < 2 * n; ++j) at(i, j) = sub(at(i, j), mul(f, at(col, j)));
    }
  }
  if (d.den != 1) throw std::logic_error("non-integral determinant");
  det = static_cast<Int>(d.num);
  adj.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Q q = mul(at(i, n + j), Q{d.num, 1});
      if (q.den != 1) throw std::logic_error("non-integral adjugate");
      adj[static_cast<std::size_t>(i * n + j)] = static_cast<Int>(q.num);
    }
}

}  // namespace

RootSystem RootSystem::build(std::string_view spec) {
  auto parts = parse_spec(spec);
  int total = 0;
  for (const auto& p : parts) total += p.rank;
  if (total > kMaxRank)
    throw std::invalid_argument("rank " + std::to_string(total) + " exceeds the bound " +
                                std::to_string(kMaxRank));
  RootSystem rs;
  rs.rank_ = total;
  rs.cartan_.assign(static_cast<std::size_t>(total * total), 0);
  rs.node_component_.assign(static_cast<std::size_t>(total), 0);
  std::string name;
  int offset = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    auto local = component_cartan(p);
    Component comp;
    comp.type = p.type;
    comp.rank = p.rank;
    for (int i = 0; i < p.rank; ++i) {
      comp.nodes.push_back(offset + i);
      rs.node_component_[static_cast<std::size_t>(offset + i)] = static_cast<int>(k);
      for (int j = 0; j < p.rank; ++j)
        rs.cartan_[static_cast<std::size_t>((offset + i) * total + offset + j)] =
            local[static_cast<std::size_t>(i * p.rank + j)];
    }
    rs.components_.push_back(std::move(comp));
    if (k) name += 'x';
    name += p.type;
    name += std::to_string(p.rank);
    offset += p.rank;
  }
  rs.name_ = name;
  rs.finish();
  return rs;
}

void RootSystem::finish() {
  const int n = rank_;
  integer_adjugate(cartan_, n, adjugate_, det_);
  if (det_ <= 0) throw std::invalid_argument("Cartan matrix is not of finite type");
  height_functional_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      height_functional_[static_cast<std::size_t>(k)] += adjugate_[static_cast<std::size_t>(i * n + k)];

  // Symmetrizer, propagated along the Dynkin diagram of each component.
  sym_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& comp : components_) {
    std::deque<int> queue{comp.nodes.front()};
    sym_[static_cast<std::size_t>(comp.nodes.front())] = 6;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j : comp.nodes) {
        if (j == i || cartan(i, j) == 0 || sym_[static_cast<std::size_t>(j)] != 0) continue;
        Int num = sym_[static_cast<std::size_t>(i)] * cartan(i, j);
        if (num % cartan(j, i) != 0) throw std::logic_error("symmetrizer is not integral");
        sym_[static_cast<std::size_t>(j)] = num / cartan(j, i);
        queue.push_back(j);
      }
    }
    Int g = 0;
    for (int j : comp.nodes) g = std::gcd(g, sym_[static_cast<std::size_t>(j)]);
    for (int j : comp.nodes) sym_[static_cast<std::size_t>(j)] /= g;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sym_[static_cast<std::size_t>(i)] * cartan(i, j) != sym_[static_cast<std::size_t>(j)] * cartan(j, i))
        throw std::invalid_argument("Cartan matrix is not symmetrizable");

  simple_roots_.clear();
  for (int j = 0; j < n; ++j) {
    std::vector<Int> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = cartan(i, j);
    simple_roots_.emplace_back(std::move(c));
  }

  // Positive roots (with coroots) by closure of the simple roots under simple reflections.
  std::set<std::vector<Int>> seen;
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> found;
  std::deque<std::size_t> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    found.emplace_back(e, e);
    queue.push_back(found.size() - 1);
  }
  while (!queue.empty()) {
    auto [r, c] = found[queue.front()];
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Int p = 0;  // <gamma, alpha_i^vee>
      Int q = 0;  // <alpha_i, gamma^vee>
      for (int j = 0; j < n; ++j) {
        p += r[static_cast<std::size_t>(j)] * cartan(i, j);
        q += c[static_cast<std::size_t>(j)] * cartan(j, i);
      }
      auto r2 = r;
      auto c2 = c;
      r2[static_cast<std::size_t>(i)] -= p;
      c2[static_cast<std::size_t>(i)] -= q;
      if (std::any_of(r2.begin(), r2.end(), [](Int x) { return x < 0; })) continue;
      if (seen.insert(r2).second) {
        found.emplace_back(std::move(r2), std::move(c2));
        queue.push_back(found.size() - 1);
      }
    }
  }
  if (found.size() > kMaxPositiveRoots) throw std::logic_error("too many positive roots");
  positive_roots_.clear();
  for (auto& [r, c] : found) {
    PositiveRoot pr;
    pr.weight = from_root_coordinates(r);
    pr.height = static_cast<int>(std::accumulate(r.begin(), r.end(), Int{0}));
    pr.root_coords = std::move(r);
    pr.coroot_coords = std::move(c);
    positive_roots_.push_back(std::move(pr));
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.root_coords < b.root_coords;
  });
  for (auto& comp : components_) {
    int best = -1;
    for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
      const auto& r = positive_roots_[k].root_coords;
      if (r[static_cast<std::size_t>(comp.nodes.front())] == 0) continue;
      if (best < 0 || positive_roots_[k].height > positive_roots_[static_cast<std::size_t>(best)].height)
        best = static_cast<int>(k);
    }
    comp.highest_root = best;
  }
}

Weight RootSystem::fundamental(int i) const {
  Weight w = zero();
  w[i] = 1;
  return w;
}

Int RootSystem::pairing(const Weight& lambda, int root_index) const {
  return pairing(lambda, positive_roots_[static_cast<std::size_t>(root_index)].coroot_coords);
}

Int RootSystem::pairing(const Weight& lambda, const std::vector<Int>& coroot_coords) const {
  Int acc = 0;
  for (int i = 0; i < rank_; ++i) acc += coroot_coords[static_cast<std::size_t>(i)] * lambda[i];
  return acc;
}

int RootSystem::positive_root_index(const Weight& root) const {
  for (std::size_t k = 0; k < positive_roots_.size(); ++k)
    if (positive_roots_[k].weight == root) return static_cast<int>(k);
  return -1;
}

bool RootSystem::is_dominant(const Weight& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (lambda[i] < 0) return false;
  return true;
}

bool RootSystem::is_regular(const Weight& lambda) const {
  for (std::size_t k = 0; k < positive_roots_.size(); ++k)
    if (pairing(lambda, static_cast<int>(k)) == 0) return false;
  return true;
}

std::optional<std::vector<Int>> RootSystem::root_coordinates(const Weight& lambda) const {
  std::vector<Int> r(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    Int acc = 0;
    for (int k = 0; k < rank_; ++k) acc += adjugate_[static_cast<std::size_t>(i * rank_ + k)] * lambda[k];
    if (acc % det_ != 0) return std::nullopt;
    r[static_cast<std::size_t>(i)] = acc / det_;
  }
  return r;
}

Weight RootSystem::from_root_coordinates(const std::vector<Int>& coeffs) const {
  std::vector<Int> out(static_cast<std::size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[static_cast<std::size_t>(i)] += cartan(i, j) * coeffs[static_cast<std::size_t>(j)];
  return Weight(std::move(out));
}

std::optional<Int> RootSystem::height(const Weight& lambda) const {
  auto r = root_coordinates(lambda);
  if (!r) return std::nullopt;
  return std::accumulate(r->begin(), r->end(), Int{0});
}

int RootSystem::root_height_sign(const Weight& x) const {
  Int acc = 0;
  for (int k = 0; k < rank_; ++k) acc += height_functional_[static_cast<std::size_t>(k)] * x[k];
  return (acc > 0) - (acc < 0);
}

bool RootSystem::dominance_leq(const Weight& lambda, const Weight& mu) const {
  auto r = root_coordinates(mu - lambda);
  if (!r) return false;
  return std::all_of(r->begin(), r->end(), [](Int x) { return x >= 0; });
}

Int RootSystem::form_with_root(const Weight& lambda, const std::vector<Int>& mu_root_coords) const {
  Int acc = 0;
  for (int j = 0; j < rank_; ++j)
    acc += mu_root_coords[static_cast<std::size_t>(j)] * sym_[static_cast<std::size_t>(j)] * lambda[j];
  return acc;
}

// ---------------------------------------------------------------------------
// Weyl group

InversionSet RootSystem::compute_inversions(const std::vector<Int>& m) const {
  InversionSet inv;
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    const Weight& a = positive_roots_[k].weight;
    Int acc = 0;
    for (int i = 0; i < rank_; ++i) {
      Int row = 0;
      for (int j = 0; j < rank_; ++j) row += m[static_cast<std::size_t>(i * rank_ + j)] * a[j];
      acc += height_functional_[static_cast<std::size_t>(i)] * row;
    }
    if (acc < 0) inv.set(k);
  }
  return inv;
}

WeylElement RootSystem::identity() const {
  WeylElement w;
  w.rank_ = rank_;
  w.m_.assign(static_cast<std::size_t>(rank_ * rank_), 0);
  for (int i = 0; i < rank_; ++i) w.m_[static_cast<std::size_t>(i * rank_ + i)] = 1;
  w.inv_ = w.m_;
  return w;
}

WeylElement RootSystem::simple_reflection(int i) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("simple reflection index out of range");
  WeylElement w = identity();
  for (int k = 0; k < rank_; ++k) w.m_[static_cast<std::size_t>(k * rank_ + i)] -= cartan(k, i);
  w.inv_ = w.m_;
  w.inversions_ = compute_inversions(w.m_);
  return w;
}

WeylElement RootSystem::reflection(int root_index) const {
  const auto& r = positive_roots_.at(static_cast<std::size_t>(root_index));
  WeylElement w = identity();
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      w.m_[static_cast<std::size_t>(i * rank_ + j)] -= r.weight[i] * r.coroot_coords[static_cast<std::size_t>(j)];
  w.inv_ = w.m_;
  w.inversions_ = compute_inversions(w.m_);
  return w;
}

WeylElement RootSystem::compose(const WeylElement& a, const WeylElement& b) const {
  auto mul = [n = rank_](const std::vector<Int>& x, const std::vector<Int>& y) {
    std::vector<Int> r(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        Int xik = x[static_cast<std::size_t>(i * n + k)];
        if (xik == 0) continue;
        for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(i * n + j)] += xik * y[static_cast<std::size_t>(k * n + j)];
      }
    return r;
  };
  WeylElement w;
  w.rank_ = rank_;
  w.m_ = mul(a.m_, b.m_);
  w.inv_ = mul(b.inv_, a.inv_);
  w.inversions_ = compute_inversions(w.m_);
  return w;
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
  WeylElement r;
  r.rank_ = rank_;
  r.m_ = w.inv_;
  r.inv_ = w.m_;
  r.inversions_ = compute_inversions(r.m_);
  return r;
}

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
  WeylElement w = identity();
  for (int i : word) w = compose(w, simple_reflection(i));
  return w;
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w) const {
  std::vector<int> simple_index(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) simple_index[static_cast<std::size_t>(i)] = positive_root_index(simple_roots_[static_cast<std::size_t>(i)]);
  std::vector<int> peeled;
  WeylElement u = w;
  while (u.length() > 0) {
    int found = -1;
    for (int i = 0; i < rank_; ++i)
      if (u.inversions().test(static_cast<std::size_t>(simple_index[static_cast<std::size_t>(i)]))) {
        found = i;
        break;
      }
    if (found < 0) throw std::logic_error("no descent for a nontrivial Weyl element");
    peeled.push_back(found);
    u = compose(u, simple_reflection(found));
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

WeylElement RootSystem::longest_element() const { return dominant_rep(-rho()).element; }

DominantRep RootSystem::dominant_rep(const Weight& lambda) const {
  DominantRep rep;
  rep.dominant = lambda;
  rep.element = identity();
  while (true) {
    int found = -1;
    for (int i = 0; i < rank_; ++i)
      if (rep.dominant[i] < 0) {
        found = i;
        break;
      }
    if (found < 0) break;
    const Int c = rep.dominant[found];
    rep.dominant -= c * simple_roots_[static_cast<std::size_t>(found)];
    rep.element = compose(simple_reflection(found), rep.element);
    rep.word.push_back(found);
  }
  rep.delta = static_cast<int>(rep.word.size());
  if (rep.element.length() != rep.delta) throw std::logic_error("dominant_rep produced a non-reduced element");
  return rep;
}

std::size_t RootSystem::weyl_group_order() const {
  std::size_t order = 1;
  for (const auto& c : components_) order *= component_weyl_order({c.type, c.rank});
  return order;
}

std::vector<WeylElement> RootSystem::weyl_group(std::size_t bound) const {
  if (weyl_group_order() > bound)
    throw std::length_error("Weyl group of " + name_ + " has order " + std::to_string(weyl_group_order()) +
                            ", above the enumeration bound " + std::to_string(bound));
  std::vector<WeylElement> elements{identity()};
  std::unordered_set<Weight, WeightHash> seen{rho()};
  std::vector<WeylElement> gens;
  for (int i = 0; i < rank_; ++i) gens.push_back(simple_reflection(i));
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : gens) {
      WeylElement next = compose(elements[head], s);
      if (seen.insert(next.apply(rho())).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& lambda) const {
  std::vector<Weight> orbit{lambda};
  std::unordered_set<Weight, WeightHash> seen{lambda};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (int i = 0; i < rank_; ++i) {
      Weight cur = orbit[head];
      Weight next = cur - cur[i] * simple_roots_[static_cast<std::size_t>(i)];
      if (seen.insert(next).second) orbit.push_back(std::move(next));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<Weight> RootSystem::conv_set(const Weight& lambda) const {
  // Saturation of dom(lambda) under root strings: for a weight mu and a
  // positive root gamma with <mu, gamma^vee> = k > 0, all of mu - j*gamma,
  // 0 <= j <= k, belong to the set.
  Weight top = dom(lambda);
  std::vector<Weight> out{top};
  std::unordered_set<Weight, WeightHash> seen{top};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
      const Weight mu = out[head];
      const Int p = pairing(mu, static_cast<int>(k));
      const Int sign = p > 0 ? 1 : -1;
      for (Int j = 1; j <= (p > 0 ? p : -p); ++j) {
        Weight next = mu - (sign * j) * positive_roots_[k].weight;
        if (seen.insert(next).second) out.push_back(std::move(next));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> RootSystem::conv_interior(const Weight& lambda) const {
  auto all = conv_set(lambda);
  auto orbit = weyl_orbit(lambda);
  std::vector<Weight> out;
  std::set_difference(all.begin(), all.end(), orbit.begin(), orbit.end(), std::back_inserter(out));
  return out;
}

std::vector<Weight> RootSystem::dominant_below(const Weight& lambda) const {
  std::vector<Weight> out;
  for (auto& mu : conv_set(lambda))
    if (is_dominant(mu)) out.push_back(mu);
  return out;
}

bool RootSystem::is_minuscule(int i) const {
  for (const auto& r : positive_roots_)
    if (r.coroot_coords[static_cast<std::size_t>(i)] > 1) return false;
  return true;
}

}  // namespace exotic
