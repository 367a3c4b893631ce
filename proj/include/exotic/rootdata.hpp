#pragma once

// Finite root systems of simply-connected semisimple type.
//
// Weights are always stored in fundamental-weight coordinates, so that
// coords[i] = <lambda, alpha_i^vee>. The Cartan matrix follows the convention
// A(i, j) = <alpha_j, alpha_i^vee>, hence alpha_j has fundamental coordinates
// given by column j of A.

#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exotic {

using Int = std::int64_t;

inline constexpr int kMaxRank = 8;
inline constexpr std::size_t kMaxPositiveRoots = 128;
inline constexpr std::size_t kDefaultWeylBound = 1'000'000;

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Int> coords) : c_(std::move(coords)) {}
  Weight(std::initializer_list<Int> coords) : c_(coords) {}

  static Weight zero(int rank) { return Weight(std::vector<Int>(static_cast<std::size_t>(rank), 0)); }

  int rank() const { return static_cast<int>(c_.size()); }
  Int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& coords() const { return c_; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  friend Weight operator*(Int k, Weight a);

  bool is_zero() const;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  // "[a1,...,ar]"
  std::string str() const;

 private:
  std::vector<Int> c_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

// Parses "[a1,...,ar]"; whitespace tolerated. Throws std::invalid_argument.
Weight parse_weight(std::string_view text);

using InversionSet = std::bitset<kMaxPositiveRoots>;

// Element of the finite Weyl group, stored as its integer matrix on
// fundamental-weight coordinates together with the inverse matrix and the set
// of positive roots it sends to negative roots.
class WeylElement {
 public:
  WeylElement() = default;

  int rank() const { return rank_; }
  int length() const { return static_cast<int>(inversions_.count()); }
  const std::vector<Int>& matrix() const { return m_; }
  const std::vector<Int>& inverse_matrix() const { return inv_; }
  const InversionSet& inversions() const { return inversions_; }
  bool is_identity() const;

  Weight apply(const Weight& w) const { return apply_matrix(m_, w); }
  Weight apply_inverse(const Weight& w) const { return apply_matrix(inv_, w); }

  std::strong_ordering operator<=>(const WeylElement& o) const { return m_ <=> o.m_; }
  bool operator==(const WeylElement& o) const { return m_ == o.m_; }

 private:
  friend class RootSystem;
  Weight apply_matrix(const std::vector<Int>& m, const Weight& w) const;

  int rank_ = 0;
  std::vector<Int> m_;
  std::vector<Int> inv_;
  InversionSet inversions_;
};

struct PositiveRoot {
  Weight weight;                  // fundamental-weight coordinates
  std::vector<Int> root_coords;   // coefficients on the simple roots
  std::vector<Int> coroot_coords; // coefficients of the coroot on the simple coroots
  int height = 0;
};

struct Component {
  char type = 'A';
  int rank = 0;
  std::vector<int> nodes;  // global simple indices, in Bourbaki order
  int highest_root = -1;   // index into positive_roots()
};

struct DominantRep {
  Weight dominant;
  WeylElement element;  // minimal-length v with v * lambda dominant
  int delta = 0;        // length of element
  std::vector<int> word;  // simple indices s_{i1}, s_{i2}, ... in the order applied
};

class RootSystem {
 public:
  // Accepts "A1", "B2", "G2", "A1xA1", ... Types A_n (n>=1), B_n (n>=2),
  // C_n (n>=2), D_n (n>=4), E6-E8, F4, G2. Total rank is bounded by kMaxRank.
  static RootSystem build(std::string_view spec);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  Int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
  const std::vector<Int>& cartan_matrix() const { return cartan_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
  const std::vector<Component>& components() const { return components_; }
  // Symmetrizing factors: d_i * A(i, j) is symmetric, d_i = (alpha_i, alpha_i) / 2 up to scale.
  const std::vector<Int>& symmetrizer() const { return sym_; }
  int component_of(int node) const { return node_component_[static_cast<std::size_t>(node)]; }

  Weight rho() const { return Weight(std::vector<Int>(static_cast<std::size_t>(rank_), 1)); }
  Weight zero() const { return Weight::zero(rank_); }
  Weight fundamental(int i) const;

  // <lambda, gamma^vee> for the positive root with the given index.
  Int pairing(const Weight& lambda, int root_index) const;
  // <lambda, beta^vee> for an arbitrary coroot given in simple-coroot coordinates.
  Int pairing(const Weight& lambda, const std::vector<Int>& coroot_coords) const;
  // Index of a positive root given by fundamental coordinates, or -1.
  int positive_root_index(const Weight& root) const;

  bool is_dominant(const Weight& lambda) const;
  bool is_regular(const Weight& lambda) const;
  // Root-lattice coordinates of lambda, if lambda lies in ZPhi.
  std::optional<std::vector<Int>> root_coordinates(const Weight& lambda) const;
  bool in_root_lattice(const Weight& lambda) const { return root_coordinates(lambda).has_value(); }
  bool same_coset(const Weight& a, const Weight& b) const { return in_root_lattice(a - b); }
  Weight from_root_coordinates(const std::vector<Int>& coeffs) const;
  // Sum of root coordinates; only meaningful for elements of ZPhi.
  std::optional<Int> height(const Weight& lambda) const;

  // lambda <= mu iff mu - lambda is a nonnegative integer combination of simple roots.
  bool dominance_leq(const Weight& lambda, const Weight& mu) const;

  // (lambda, mu) for the invariant form scaled so that (alpha_i, alpha_j) = d_i A(i, j),
  // with mu in root coordinates.
  Int form_with_root(const Weight& lambda, const std::vector<Int>& mu_root_coords) const;

  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;
  // s_gamma for the positive root with the given index.
  WeylElement reflection(int root_index) const;
  WeylElement compose(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;
  WeylElement from_word(const std::vector<int>& word) const;
  // Reduced word s_{i1} ... s_{ik} of w, found by repeatedly peeling the
  // smallest right descent.
  std::vector<int> reduced_word(const WeylElement& w) const;
  WeylElement longest_element() const;

  DominantRep dominant_rep(const Weight& lambda) const;
  Weight dom(const Weight& lambda) const { return dominant_rep(lambda).dominant; }

  std::vector<WeylElement> weyl_group(std::size_t bound = kDefaultWeylBound) const;
  std::size_t weyl_group_order() const;
  std::vector<Weight> weyl_orbit(const Weight& lambda) const;

  // conv(lambda) = { mu in lambda + ZPhi : dom(mu) <= dom(lambda) }, sorted.
  std::vector<Weight> conv_set(const Weight& lambda) const;
  // conv(lambda) minus the orbit W lambda, sorted.
  std::vector<Weight> conv_interior(const Weight& lambda) const;

  // The dominant weights nu with nu <= dom(lambda), sorted.
  std::vector<Weight> dominant_below(const Weight& lambda) const;

  bool is_minuscule(int i) const;

 private:
  RootSystem() = default;
  void finish();
  InversionSet compute_inversions(const std::vector<Int>& m) const;
  // sign of the height of an element of ZPhi given in fundamental coordinates
  int root_height_sign(const Weight& x) const;

  std::string name_;
  int rank_ = 0;
  std::vector<Int> cartan_;
  std::vector<Int> adjugate_;  // det(A) * A^{-1}
  Int det_ = 1;
  std::vector<Int> height_functional_;  // row sums of the adjugate
  std::vector<Int> sym_;
  std::vector<Component> components_;
  std::vector<int> node_component_;
  std::vector<Weight> simple_roots_;
  std::vector<PositiveRoot> positive_roots_;
};

// Enumerates the box of weights with every coordinate in [lo, hi].
std::vector<Weight> weight_box(int rank, Int lo, Int hi);

}  // namespace exotic
