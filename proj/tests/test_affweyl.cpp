#include <doctest.h>

#include <random>

#include "exotic/affweyl.hpp"
#include "exotic/parse.hpp"
#include "oracles.hpp"

using namespace exotic;

namespace {

const std::vector<std::string> kTypes = {"A1", "A2", "B2", "C2", "G2", "A1xA1", "A3"};

}  // namespace

TEST_CASE("group law") {
  for (const auto& name : kTypes) {
    auto g = AffineWeylGroup::make(name);
    std::mt19937 rng(3);
    auto ball = oracle::cayley_ball(*g, 3);
    std::vector<AffineElement> elts;
    for (const auto& [x, d] : ball) elts.push_back(x);
    std::uniform_int_distribution<std::size_t> pick(0, elts.size() - 1);
    for (int i = 0; i < 200; ++i) {
      const auto &a = elts[pick(rng)], &b = elts[pick(rng)], &c = elts[pick(rng)];
      CHECK(g->multiply(g->multiply(a, b), c) == g->multiply(a, g->multiply(b, c)));
      CHECK(g->multiply(a, g->inverse(a)) == g->identity());
      CHECK(g->length(g->inverse(a)) == g->length(a));
    }
  }
}

TEST_CASE("lengths") {
  auto a1 = AffineWeylGroup::make("A1");
  CHECK(a1->length(a1->translation(Weight{1})) == 1);
  CHECK(a1->length(a1->translation(Weight{2})) == 2);
  AffineElement st{a1->roots().simple_reflection(0), Weight{-1}};
  CHECK(a1->length(st) == 0);
  auto a2 = AffineWeylGroup::make("A2");
  CHECK(a2->length(a2->translation(a2->roots().rho())) == 4);
}

TEST_CASE("length is the distance from Omega in the Cayley graph") {
  for (const auto& name : kTypes) {
    auto g = AffineWeylGroup::make(name);
    for (const auto& [x, d] : oracle::cayley_ball(*g, 5)) {
      CHECK(g->length(x) == d);
      for (GeneratorId s = 0; s < g->num_generators(); ++s) CHECK(std::abs(g->length(g->right_multiply(x, s)) - d) == 1);
    }
  }
}

TEST_CASE("affine generators") {
  auto a1 = AffineWeylGroup::make("A1");
  REQUIRE(a1->num_generators() == 2);
  AffineElement s0{a1->roots().simple_reflection(0), Weight{-2}};
  CHECK(a1->generator(1) == s0);
  CHECK(a1->generator_name(1) == "s0");

  auto a2 = AffineWeylGroup::make("A2");
  REQUIRE(a2->num_generators() == 3);
  int theta = a2->roots().positive_root_index(Weight{1, 1});
  AffineElement s0a2{a2->roots().reflection(theta), Weight{-1, -1}};
  CHECK(a2->generator(2) == s0a2);
  CHECK(AffineWeylGroup::make("B2")->num_generators() == 3);

  auto aa = AffineWeylGroup::make("A1xA1");
  CHECK(aa->num_generators() == 4);
  CHECK(aa->generator_name(2) == "s0_1");
  CHECK(aa->parse_generator("s0_2") == 3);
  CHECK_THROWS_AS(aa->parse_generator("s0"), std::invalid_argument);
  for (const auto& name : kTypes) {
    auto g = AffineWeylGroup::make(name);
    for (GeneratorId s = 0; s < g->num_generators(); ++s) {
      CHECK(g->length(g->generator(s)) == 1);
      CHECK(g->multiply(g->generator(s), g->generator(s)) == g->identity());
      if (!g->is_finite_generator(s)) CHECK_FALSE(g->generator(s).translation.is_zero());
    }
  }
}

TEST_CASE("Omega") {
  auto expected = std::vector<std::pair<std::string, std::size_t>>{
      {"A1", 2}, {"A2", 3}, {"A3", 4}, {"B2", 2}, {"C3", 2}, {"G2", 1}, {"D4", 4}, {"A1xA1", 4}, {"E6", 3}};
  for (const auto& [name, order] : expected) {
    auto g = AffineWeylGroup::make(name);
    CAPTURE(name);
    CHECK(g->omegas().size() == order);
    CHECK(g->omega(0) == g->identity());
    for (int i = 0; i < static_cast<int>(order); ++i) {
      CHECK(g->length(g->omega(i)) == 0);
      CHECK(g->parse_omega(g->omega_name(i)) == i);
      for (GeneratorId s = 0; s < g->num_generators(); ++s) {
        AffineElement conj = g->multiply(g->multiply(g->omega(i), g->generator(s)), g->inverse(g->omega(i)));
        CHECK(conj == g->generator(g->omega_conjugate(i, s)));
      }
    }
  }
  auto a1 = AffineWeylGroup::make("A1");
  CHECK(a1->omega_name(1) == "omega");
  CHECK(a1->multiply(a1->omega(1), a1->omega(1)) == a1->identity());
  auto a2 = AffineWeylGroup::make("A2");
  CHECK_THROWS_AS(a2->parse_omega("omega"), std::invalid_argument);
  auto dec = a2->omega_decompose(a2->translation(Weight{1, 0}));
  CHECK(a2->omega_name(dec.omega) == "omega1");
  CHECK(a2->length(dec.coxeter_part) == a2->length(a2->translation(Weight{1, 0})));
}

TEST_CASE("reduced words") {
  auto a1 = AffineWeylGroup::make("A1");
  auto rw = a1->reduced_word(a1->identity());
  CHECK(rw.omega == 0);
  CHECK(rw.word.empty());
  rw = a1->reduced_word(a1->translation(Weight{1}));
  CHECK(rw.omega == 1);
  CHECK(rw.word == std::vector<GeneratorId>{0});
  rw = a1->reduced_word(a1->translation(Weight{2}));
  CHECK(rw.omega == 0);
  CHECK(rw.word == std::vector<GeneratorId>{1, 0});
  CHECK(a1->word_string(rw) == "s0 s1");
  rw = a1->reduced_word(a1->generator(0));
  CHECK(rw.omega == 0);
  CHECK(rw.word == std::vector<GeneratorId>{0});

  for (const auto& name : kTypes) {
    auto g = AffineWeylGroup::make(name);
    for (const auto& [x, d] : oracle::cayley_ball(*g, 5)) {
      auto w = g->reduced_word(x);
      CHECK(static_cast<int>(w.word.size()) == g->length(x));
      CHECK(g->evaluate(w) == x);
    }
  }
}

TEST_CASE("Bruhat order") {
  auto a1 = AffineWeylGroup::make("A1");
  auto t = a1->translation(Weight{1});
  CHECK(a1->bruhat_leq(a1->omega(1), t));
  CHECK_FALSE(a1->bruhat_leq(a1->generator(0), t));
  CHECK(a1->bruhat_leq(a1->identity(), a1->generator(1)));

  for (const auto& name : {"A1", "A2", "B2", "G2"}) {
    auto g = AffineWeylGroup::make(name);
    auto ball = oracle::cayley_ball(*g, 4);
    for (const auto& [y, dy] : ball) {
      auto lower = oracle::bruhat_lower_set(*g, y);
      for (const auto& [x, dx] : ball) CHECK(g->bruhat_leq(x, y) == (lower.count(x) > 0));
    }
  }
}

TEST_CASE("w_lambda") {
  auto a1 = AffineWeylGroup::make("A1");
  auto w = a1->w_lambda(Weight{1});
  CHECK(w.element == a1->translation(Weight{1}));
  CHECK(w.delta == 0);
  w = a1->w_lambda(Weight{-1});
  CHECK(w.element == a1->omega(1));
  CHECK(w.delta == 1);
  w = a1->w_lambda(Weight{-2});
  CHECK(w.element == a1->generator(1));
  CHECK(w.delta == 1);

  for (const auto& name : {"A1", "A2", "B2", "G2", "A1xA1"}) {
    auto g = AffineWeylGroup::make(name);
    for (const auto& l : weight_box(g->rank(), -3, 3)) {
      auto [best, delta] = oracle::w_lambda_brute(*g, l);
      auto wl = g->w_lambda(l);
      CHECK(wl.element == best);
      CHECK(wl.delta == delta);
      CHECK(g->length(wl.element) == g->length(g->translation(l)) - delta);
    }
  }
}

TEST_CASE("order on weights") {
  auto a1 = AffineWeylGroup::make("A1");
  CHECK(a1->order_leq(Weight{-1}, Weight{1}));
  CHECK_FALSE(a1->order_leq(Weight{1}, Weight{2}));
  CHECK(a1->order_leq(Weight{3}, Weight{3}));
  for (const auto& name : {"A1", "A2", "B2"}) {
    auto g = AffineWeylGroup::make(name);
    const auto& rs = g->roots();
    auto box = weight_box(rs.rank(), -2, 2);
    for (const auto& a : box)
      for (const auto& b : box) {
        if (!rs.same_coset(a, b)) {
          CHECK_FALSE(g->order_leq(a, b));
        } else if ((rs.is_dominant(a) && rs.is_dominant(b)) || rs.dom(a) == rs.dom(b)) {
          CHECK(g->order_leq(a, b) == oracle::dominance_leq(rs, a, b));
        }
      }
  }
}

TEST_CASE("element expressions") {
  auto a1 = AffineWeylGroup::make("A1");
  CHECK(parse_element(*a1, "t[1]") == a1->translation(Weight{1}));
  CHECK(parse_element(*a1, "omega s1") == a1->translation(Weight{1}));
  CHECK(parse_element(*a1, "omega*s1") == a1->translation(Weight{1}));
  CHECK(parse_element(*a1, "s0 s1") == a1->translation(Weight{2}));
  CHECK(parse_element(*a1, "s1^-1") == a1->generator(0));
  CHECK(parse_element(*a1, "t[1]^-1") == a1->translation(Weight{-1}));
  CHECK(parse_element(*a1, "w0") == a1->generator(0));
  CHECK(parse_element(*a1, "e") == a1->identity());
  CHECK_THROWS_AS(parse_element(*a1, "theta[1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(*a1, "s2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(*a1, "t[1,0]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(*a1, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(*a1, "t[1"), std::invalid_argument);
  CHECK(tokenize_expression("t[1, 2] * s1  s0") == std::vector<std::string>{"t[1,2]", "s1", "s0"});
}
