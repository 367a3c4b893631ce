#include <doctest.h>

#include "exotic/charring.hpp"
#include "oracles.hpp"

using namespace exotic;

namespace {

CharacterRing ring(const char* spec) { return CharacterRing(RootSystem::build(spec)); }

LaurentPoly P(std::initializer_list<std::pair<int, LaurentPoly::Coeff>> terms) { return LaurentPoly::from_pairs(terms); }

}  // namespace

TEST_CASE("partition function") {
  auto a2 = ring("A2");
  CHECK(a2.kostant_partition(Weight{0, 0}) == LaurentPoly(1));
  CHECK(a2.kostant_partition(Weight{-2, 1}).is_zero());
  CHECK(a2.kostant_partition(Weight{1, 1}) == P({{1, 1}, {2, 1}}));
  CHECK(a2.kostant_partition(Weight{1, 0}).is_zero());  // not in the root lattice
  auto a1 = ring("A1");
  CHECK(a1.kostant_partition(Weight{4}) == P({{2, 1}}));
}

TEST_CASE("partition function agrees with the product expansion") {
  for (const char* spec : {"A1", "A2", "B2", "G2", "A3", "A1xA1"}) {
    auto R = ring(spec);
    const RootSystem& rs = R.roots();
    for (const auto& c : weight_box(rs.rank(), 0, 4)) {
      Weight mu = rs.from_root_coordinates(c.coords());
      LaurentPoly p = R.kostant_partition(mu);
      CHECK(p == oracle::partition_by_product(rs, c.coords()));
      CHECK(p.is_nonnegative());
      if (!p.is_zero()) CHECK(p.max_degree() <= *rs.height(mu));
    }
  }
}

TEST_CASE("q-analogues") {
  auto a1 = ring("A1");
  CHECK(a1.lusztig_q(Weight{2}, Weight{0}) == LaurentPoly::v(1));
  CHECK(a1.lusztig_q(Weight{3}, Weight{3}) == LaurentPoly(1));
  auto a2 = ring("A2");
  CHECK(a2.lusztig_q(Weight{1, 1}, Weight{0, 0}) == P({{1, 1}, {2, 1}}));
  CHECK(a2.lusztig_q(Weight{1, 1}, Weight{1, 0}).is_zero());
}

TEST_CASE("Freudenthal multiplicities") {
  auto a1 = ring("A1");
  CHECK(a1.freudenthal_mult(Weight{1}, Weight{1}) == 1);
  CHECK(a1.freudenthal_mult(Weight{2}, Weight{0}) == 1);
  CHECK(a1.freudenthal_mult(Weight{2}, Weight{1}) == 0);
  for (int n = 0; n <= 6; ++n)
    for (int k = -8; k <= 8; ++k)
      CHECK(a1.freudenthal_mult(Weight{n}, Weight{k}) == ((std::abs(k) <= n && (n - k) % 2 == 0) ? 1 : 0));
  auto a2 = ring("A2");
  CHECK(a2.freudenthal_mult(Weight{1, 1}, Weight{0, 0}) == 2);
  CHECK_THROWS_AS(a2.freudenthal_mult(Weight{-1, 0}, Weight{0, 0}), std::invalid_argument);
  auto g2 = ring("G2");
  CHECK(g2.weyl_dimension(Weight{1, 0}) == 7);
  CHECK(g2.weyl_dimension(Weight{0, 1}) == 14);
  CHECK(g2.freudenthal_mult(Weight{0, 1}, Weight{0, 0}) == 2);
}

TEST_CASE("weights of a module sum to the Weyl dimension and fill conv") {
  for (const char* spec : {"A1", "A2", "B2", "C2", "G2", "A3", "B3", "A1xA1"}) {
    auto R = ring(spec);
    const RootSystem& rs = R.roots();
    for (const auto& l : weight_box(rs.rank(), 0, 2)) {
      auto ws = R.weights_of(l);
      Int total = 0;
      for (const auto& [w, c] : ws) total += c;
      CHECK(total == R.weyl_dimension(l));
      CHECK(ws.size() == rs.conv_set(l).size());
    }
  }
}

TEST_CASE("Kostant multiplicity formula matches Freudenthal, and support") {
  for (const char* spec : {"A1", "A2", "B2", "G2"}) {
    auto R = ring(spec);
    const RootSystem& rs = R.roots();
    auto dom = weight_box(rs.rank(), 0, 2);
    for (const auto& l : dom)
      for (const auto& mu : dom) {
        LaurentPoly q = R.lusztig_q(l, mu);
        CHECK(q.at_one() == R.freudenthal_mult(l, mu));
        if (!q.is_zero()) CHECK(rs.dominance_leq(mu, l));
      }
  }
}

TEST_CASE("tensor products") {
  auto a1 = ring("A1");
  auto cm = a1.tensor_decompose(Weight{1}, Weight{1});
  CHECK(cm.mults == std::map<Weight, Int>{{Weight{0}, 1}, {Weight{2}, 1}});
  auto a2 = ring("A2");
  CHECK(a2.tensor_decompose(Weight{1, 0}, Weight{0, 1}).mults == std::map<Weight, Int>{{Weight{0, 0}, 1}, {Weight{1, 1}, 1}});
  CHECK(a2.tensor_decompose(Weight{2, 1}, Weight{0, 0}).mults == std::map<Weight, Int>{{Weight{2, 1}, 1}});
  CHECK_THROWS_AS(a2.tensor_decompose(Weight{-1, 0}, Weight{0, 0}), std::invalid_argument);

  for (const char* spec : {"A1", "A2", "B2"}) {
    auto R = ring(spec);
    auto dom = weight_box(R.roots().rank(), 0, 2);
    for (const auto& a : dom)
      for (const auto& b : dom) {
        auto cm2 = R.tensor_decompose(a, b);
        CHECK(cm2.mults == oracle::tensor_brute(R, a, b));
        Int dim = 0;
        for (const auto& [nu, c] : cm2.mults) dim += c * R.weyl_dimension(nu);
        CHECK(dim == R.weyl_dimension(a) * R.weyl_dimension(b));
      }
  }
}

TEST_CASE("full weights") {
  auto a1 = ring("A1");
  CharacterMultiset cm;
  cm.mults = {{Weight{1}, 1}};
  CHECK(a1.full_weights(cm) == std::map<Weight, Int>{{Weight{-1}, 1}, {Weight{1}, 1}});
  cm.mults = {{Weight{2}, 1}};
  CHECK(a1.full_weights(cm) == std::map<Weight, Int>{{Weight{-2}, 1}, {Weight{0}, 1}, {Weight{2}, 1}});
  cm.mults = {{Weight{0}, 1}};
  CHECK(a1.full_weights(cm) == std::map<Weight, Int>{{Weight{0}, 1}});
}

TEST_CASE("partition tables round-trip") {
  auto a = ring("B2");
  a.lusztig_q(Weight{2, 2}, Weight{0, 0});
  auto table = a.partition_table();
  CHECK_FALSE(table.empty());
  auto b = ring("B2");
  b.load_partition_table(table);
  CHECK(b.partition_table() == table);
  CHECK(b.lusztig_q(Weight{2, 2}, Weight{0, 0}) == a.lusztig_q(Weight{2, 2}, Weight{0, 0}));
}
