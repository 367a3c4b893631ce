#pragma once

// Characters of finite-dimensional G-modules in characteristic zero: the
// graded Kostant partition function, Lusztig's q-analogue of weight
// multiplicity, Freudenthal multiplicities and tensor product decomposition.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "exotic/laurent.hpp"
#include "exotic/rootdata.hpp"

namespace exotic {

enum class CharacterBasis { Weyl, Good };

std::string basis_name(CharacterBasis b);
// Accepts "Weyl" and "good". Throws std::invalid_argument.
CharacterBasis parse_basis(std::string_view name);

// Multiplicities of M(nu) (Weyl basis) or N(nu) (good basis) in a module.
struct CharacterMultiset {
  CharacterBasis basis = CharacterBasis::Weyl;
  std::map<Weight, Int> mults;  // dominant keys, positive values

  bool operator==(const CharacterMultiset&) const = default;
};

class CharacterRing {
 public:
  explicit CharacterRing(RootSystem rs);

  const RootSystem& roots() const { return rs_; }

  // P_mu(v): multisets of positive roots summing to mu, weighted by v^(size).
  LaurentPoly kostant_partition(const Weight& mu) const;
  // M_lambda^mu(v) = sum_w (-1)^l(w) P_{w(lambda + rho) - (mu + rho)}(v).
  LaurentPoly lusztig_q(const Weight& lambda, const Weight& mu) const;
  // dim M(lambda)_mu for dominant lambda.
  Int freudenthal_mult(const Weight& lambda, const Weight& mu) const;
  // All weights of M(lambda) with multiplicities.
  std::map<Weight, Int> weights_of(const Weight& lambda) const;
  // dim M(lambda), by the Weyl dimension formula.
  Int weyl_dimension(const Weight& lambda) const;
  // Multiplicities of chi(nu) in chi(lambda) chi(mu).
  CharacterMultiset tensor_decompose(const Weight& lambda, const Weight& mu) const;
  // Total weight multiplicities of sum_nu cm(nu) chi(nu).
  std::map<Weight, Int> full_weights(const CharacterMultiset& cm) const;

  // Persistent partition table keyed by root coordinates.
  std::map<std::vector<Int>, LaurentPoly> partition_table() const;
  void load_partition_table(const std::map<std::vector<Int>, LaurentPoly>& table);

 private:
  LaurentPoly partition_rec(std::size_t k, const std::vector<Int>& r) const;
  const std::vector<WeylElement>& weyl() const;
  const std::map<Weight, Int>& dominant_mults(const Weight& lambda) const;

  RootSystem rs_;
  std::vector<std::vector<Int>> roots_;  // positive roots in root coordinates
  mutable std::recursive_mutex mutex_;
  mutable std::optional<std::vector<WeylElement>> weyl_;
  mutable std::map<std::pair<std::size_t, std::vector<Int>>, LaurentPoly> partial_;
  mutable std::map<std::vector<Int>, LaurentPoly> table_;
  mutable std::map<Weight, std::map<Weight, Int>> freudenthal_;
};

}  // namespace exotic
