#include <doctest.h>

#include <random>
#include <thread>

#include "exotic/hecke.hpp"
#include "exotic/parse.hpp"
#include "oracles.hpp"

using namespace exotic;

namespace {

struct Fixture {
  std::shared_ptr<const AffineWeylGroup> g;
  HeckeAlgebra H;
  explicit Fixture(const char* spec) : g(AffineWeylGroup::make(spec)), H(g) {}
  HeckeElement T(const char* expr) const { return H.basis(parse_element(*g, expr)); }
  HeckeElement eval(const char* expr) const { return H.evaluate(parse_braid(H, expr)); }
};

const LaurentPoly v = LaurentPoly::v(1);
const LaurentPoly vinv = LaurentPoly::v(-1);

}  // namespace

TEST_CASE("braid words reduce freely") {
  BraidWord w{BraidWord::simple(0), BraidWord::simple(0, -1)};
  CHECK(w.empty());
  BraidWord u{BraidWord::simple(0), BraidWord::omega(1), BraidWord::omega(1, -1), BraidWord::simple(1)};
  CHECK(u.size() == 2);
  CHECK((u + u.inverse()).empty());
  CHECK_THROWS_AS(BraidWord{BraidWord::simple(0, 2)}, std::invalid_argument);
}

TEST_CASE("products in A1") {
  Fixture f("A1");
  const auto& H = f.H;
  CHECK(H.multiply(f.T("s1"), f.T("s1")) == H.one() + (vinv - v) * f.T("s1"));
  CHECK(H.multiply(f.T("omega"), f.T("omega")) == H.one());
  CHECK(H.multiply(H.one(), f.T("s0 s1")) == f.T("s0 s1"));
  CHECK(f.eval("s1^-1 s1") == H.one());
  CHECK(f.T("s1") - H.inverse_generator(BraidWord::simple(0)) == (vinv - v) * H.one());
  CHECK(H.inverse_generator(BraidWord::omega(1)) == f.T("omega"));
  CHECK(H.evaluate(BraidWord{}) == H.one());
  CHECK(H.evaluate(BraidWord{BraidWord::omega(1), BraidWord::simple(0)}) == H.basis(f.g->translation(Weight{1})));
}

TEST_CASE("theta in A1") {
  Fixture f("A1");
  CHECK(f.H.theta(Weight{1}) == f.H.basis(f.g->translation(Weight{1})));
  CHECK(f.H.theta(Weight{0}) == f.H.one());
  HeckeElement want = f.H.basis(f.g->translation(Weight{-1})) + (v - vinv) * f.T("omega");
  CHECK(f.H.theta(Weight{-1}) == want);
  CHECK(f.H.str(f.H.theta(Weight{-1})) == "T[omega] * (v - v^-1) + T[omega s0]");
  CHECK(f.H.str(f.T("t[2]")) == "T[s0 s1]");
}

TEST_CASE("theta is a homomorphism from X") {
  for (const char* spec : {"A1", "A2", "B2", "G2", "A1xA1"}) {
    Fixture f(spec);
    const RootSystem& rs = f.g->roots();
    auto box = weight_box(rs.rank(), -1, 1);
    for (const auto& l : box) {
      CHECK(f.H.right_word(f.H.theta(l), f.H.theta_word(-l)) == f.H.one());
      if (rs.is_dominant(l)) CHECK(f.H.theta(l) == f.H.basis(f.g->translation(l)));
      // any decomposition l = mu - nu with dominant parts gives the same element
      Weight nu = rs.zero();
      for (int i = 0; i < rs.rank(); ++i) nu[i] = std::max<Int>(0, -l[i]);
      Weight shift = rs.rho();
      CHECK(f.H.evaluate(f.H.theta_word(l + nu + shift, nu + shift)) == f.H.theta(l));
    }
  }
}

TEST_CASE("multiplication agrees with the left-multiplication oracle and is associative") {
  for (const char* spec : {"A1", "A2", "B2", "G2"}) {
    Fixture f(spec);
    auto ball = oracle::cayley_ball(*f.g, 4);
    std::vector<AffineElement> elts;
    for (const auto& [x, d] : ball) elts.push_back(x);
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, elts.size() - 1);
    for (int i = 0; i < 60; ++i) {
      HeckeElement a = f.H.basis(elts[pick(rng)]), b = f.H.basis(elts[pick(rng)]), c = f.H.basis(elts[pick(rng)]);
      HeckeElement ab = f.H.multiply(a, b);
      CHECK(ab == oracle::product_left(*f.g, a, b));
      CHECK(f.H.multiply(ab, c) == f.H.multiply(a, f.H.multiply(b, c)));
    }
  }
}

TEST_CASE("evaluation is multiplicative") {
  Fixture f("B2");
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> gen(0, f.g->num_generators() - 1), sign(0, 1), len(0, 5);
  auto random_word = [&] {
    BraidWord w;
    for (int k = len(rng); k > 0; --k) w.push_back(BraidWord::simple(gen(rng), sign(rng) ? 1 : -1));
    if (sign(rng)) w.push_back(BraidWord::omega(1, sign(rng) ? 1 : -1));
    return w;
  };
  for (int i = 0; i < 40; ++i) {
    BraidWord a = random_word(), b = random_word();
    CHECK(f.H.evaluate(a + b) == f.H.multiply(f.H.evaluate(a), f.H.evaluate(b)));
  }
}

TEST_CASE("relation checks") {
  for (const char* spec : {"A1", "A2", "B2", "G2", "A1xA1", "C3"}) {
    Fixture f(spec);
    auto r = verify_hecke_relations(f.H);
    CAPTURE(spec);
    CHECK(r.ok);
    CHECK(r.checks > 0);
  }
  {
    Fixture f("A1");
    CHECK(verify_bernstein(f.H, 2).ok);
    CHECK(verify_t_translation_conjugation(f.H, 3).ok);
    // theta_pi = T_s theta_{pi - alpha} T_s
    CHECK(f.H.theta(Weight{1}) == f.eval("s1 theta[-1] s1"));
    // T_{t_{-pi}} = T_s theta_pi T_s^-1
    CHECK(f.T("t[-1]") == f.eval("s1 theta[1] s1^-1"));
  }
  {
    Fixture f("A1xA1");
    CHECK(f.eval("s1 theta[0,1]") == f.eval("theta[0,1] s1"));
  }
  {
    Fixture f("A2");
    CHECK(f.T("t[-2,1]") == f.eval("s1 s2 theta[1,1] s2^-1 s1^-1"));
  }
}

TEST_CASE("a broken relation is reported") {
  Fixture f("A1");
  VerificationReport r;
  r.record(f.H.theta(Weight{1}) == f.H.theta(Weight{-1}), "theta_1 == theta_-1");
  CHECK_FALSE(r.ok);
  CHECK(r.failures.size() == 1);
}

TEST_CASE("concurrent memo fills are idempotent") {
  Fixture f("B2");
  std::vector<std::thread> threads;
  std::vector<HeckeElement> out(4);
  for (int i = 0; i < 4; ++i) threads.emplace_back([&, i] { out[static_cast<std::size_t>(i)] = f.H.theta(Weight{-2, 1}); });
  for (auto& t : threads) t.join();
  for (const auto& x : out) CHECK(x == out[0]);
}
