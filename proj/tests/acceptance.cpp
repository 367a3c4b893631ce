// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. A criterion that exceeds its time budget fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "exotic/verify.hpp"
#include "oracles.hpp"

using namespace exotic;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::string first_failure;

  void check(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
  void merge(const VerificationReport& r, const std::string& where) {
    checks += r.checks;
    if (!r.ok && ok) first_failure = where + ": " + (r.failures.empty() ? "failed" : r.failures.front());
    ok = ok && r.ok;
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

void hecke_relations(Outcome& o) {
  for (const char* spec : {"A1", "A2", "B2", "G2"}) {
    auto tk = Toolkit::make(spec);
    const HeckeAlgebra& H = *tk.hecke;
    const AffineWeylGroup& g = *tk.group;
    o.merge(verify_hecke_relations(H), spec);
    // quadratic relation recomputed with left multiplication
    const LaurentPoly v = LaurentPoly::v(1), vinv = LaurentPoly::v(-1);
    for (GeneratorId s = 0; s < g.num_generators(); ++s) {
      HeckeElement Ts = H.basis(g.generator(s));
      HeckeElement a = Ts - vinv * H.one(), b = Ts + v * H.one();
      o.check(oracle::product_left(g, a, b).is_zero(), std::string(spec) + " quadratic " + g.generator_name(s));
    }
  }
}

void bernstein(Outcome& o) {
  for (const char* spec : {"A1", "A2", "B2"}) o.merge(verify_bernstein(*Toolkit::make(spec).hecke, 2), spec);
}

void conjugation(Outcome& o) {
  for (const char* spec : {"A1", "A2", "B2"})
    o.merge(verify_t_translation_conjugation(*Toolkit::make(spec).hecke, 3), spec);
}

void shortest_coset_elements(Outcome& o) {
  for (const char* spec : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA1", "A1xA2", "A1xA1xA1"}) {
    auto g = AffineWeylGroup::make(spec);
    for (const auto& l : weight_box(g->rank(), -4, 4)) {
      WLambda w = g->w_lambda(l);
      std::string at = std::string(spec) + " " + l.str();
      o.check(g->length(w.element) == g->length(g->translation(l)) - w.delta, at + " length identity");
      for (GeneratorId s = 0; s < g->rank(); ++s)
        o.check(g->length(g->left_multiply(s, w.element)) > g->length(w.element), at + " left descent");
      o.check(g->multiply(w.element, g->translation(-l)).translation.is_zero(), at + " coset");
      bool small = g->rank() <= 2;
      for (int i = 0; i < g->rank(); ++i) small = small && std::abs(l[i]) <= 2;
      if (small) {
        auto [best, delta] = oracle::w_lambda_brute(*g, l);
        o.check(best == w.element && delta == w.delta, at + " brute force");
      }
    }
  }
}

void order_on_weights(Outcome& o) {
  for (const char* spec : {"A1", "A2", "B2"}) {
    auto g = AffineWeylGroup::make(spec);
    const RootSystem& rs = g->roots();
    auto box = weight_box(rs.rank(), -3, 3);
    for (const auto& a : box)
      for (const auto& b : box) {
        std::string at = std::string(spec) + " " + a.str() + " vs " + b.str();
        if (!rs.same_coset(a, b)) {
          o.check(!g->order_leq(a, b), at + " different cosets comparable");
        } else if ((rs.is_dominant(a) && rs.is_dominant(b)) || rs.dom(a) == rs.dom(b)) {
          o.check(g->order_leq(a, b) == oracle::dominance_leq(rs, a, b), at + " order vs dominance");
        }
      }
  }
}

void class_anchors(Outcome& o) {
  for (const char* spec : {"A1", "A2", "B2"}) {
    auto tk = Toolkit::make(spec);
    const RootSystem& rs = tk.group->roots();
    for (const auto& l : weight_box(rs.rank(), -3, 3)) {
      std::string at = std::string(spec) + " " + l.str();
      const KModule& K = *tk.kmod;
      if (rs.is_dominant(l)) o.check(K.line_bundle_class(l) == K.basis(l), at + " dominant line bundle");
      if (rs.is_dominant(-l)) {
        int delta = tk.group->w_lambda(l).delta;
        o.check(K.line_bundle_class(l) == LaurentPoly::v(delta) * K.delta_class(l), at + " antidominant line bundle");
      }
      KClass d = K.delta_class(l);
      o.check(d.coeff(l) == LaurentPoly(1), at + " unit diagonal");
      for (const auto& [mu, c] : d.terms())
        if (mu != l) o.check(tk.group->order_leq(mu, l) && !c.is_zero(), at + " triangular at " + mu.str());
    }
  }
}

void reconciliation(Outcome& o) {
  for (const char* spec : {"A1", "A2", "B2"}) {
    auto tk = Toolkit::make(spec);
    const RootSystem& rs = tk.group->roots();
    for (const auto& nu : weight_box(rs.rank(), 0, 2)) {
      CharacterMultiset N;
      N.basis = CharacterBasis::Good;
      N.mults.emplace(nu, 1);
      KClass lhs = tk.kmod->tensor_class(tk.chars->full_weights(N), tk.kmod->origin());
      KClass rhs;
      for (const auto& mu : tk.tilt->support(N)) rhs.add_term(mu, tk.tilt->costd_mult(N, mu));
      o.check(lhs == rhs, std::string(spec) + " N" + nu.str() + ": " + lhs.str() + " vs " + rhs.str());
      o.check(tk.tilt->reconcile(N).match, std::string(spec) + " reconcile " + nu.str());
    }
  }
}

void tilting_vs_bott_samelson(Outcome& o) {
  {
    auto tk = Toolkit::make("A1");
    const KModule& K = *tk.kmod;
    KClass want = K.basis(Weight{1}) + KClass(Weight{-1}, LaurentPoly::v(1));
    KClass tilt = tk.tilt->dominant_tilting_class(Weight{1});
    KClass bs = K.bott_samelson_class(tk.group->parse_omega("omega"), {0});
    o.check(tilt == want, "A1 tilting(pi) = " + tilt.str());
    o.check(bs == want, "A1 BS(omega, s) = " + bs.str());
  }
  {
    auto tk = Toolkit::make("A2");
    const AffineWeylGroup& g = *tk.group;
    Weight pi1{1, 0};
    ReducedWord rw = g.reduced_word(g.w_lambda(pi1).element);
    std::vector<GeneratorId> seq(rw.word.rbegin(), rw.word.rend());
    KClass bs = tk.kmod->bott_samelson_class(rw.omega, seq);
    KClass tilt = tk.tilt->dominant_tilting_class(pi1);
    KClass diff = bs - tilt;
    o.check(diff.is_nonnegative(), "A2 BS - tilting not nonnegative: " + diff.str());
    for (const auto& [mu, c] : diff.terms())
      o.check(mu != pi1 && g.order_leq(mu, pi1), "A2 BS - tilting has term at " + mu.str());
  }
}

void q_analogues(Outcome& o) {
  for (const char* spec : {"A1", "A2", "B2", "G2"}) {
    CharacterRing R(RootSystem::build(spec));
    const RootSystem& rs = R.roots();
    auto dom = weight_box(rs.rank(), 0, 3);
    for (const auto& l : dom)
      for (const auto& mu : dom) {
        LaurentPoly q = R.lusztig_q(l, mu);
        std::string at = std::string(spec) + " M_" + l.str() + "^" + mu.str();
        o.check(q.at_one() == R.freudenthal_mult(l, mu), at + " at v = 1");
        if (!q.is_zero()) o.check(oracle::dominance_leq(rs, mu, l), at + " support");
      }
  }
  CharacterRing a2(RootSystem::build("A2"));
  o.check(a2.lusztig_q(Weight{1, 1}, Weight{0, 0}) == LaurentPoly::from_pairs({{1, 1}, {2, 1}}), "A2 M_rho^0");
}

void bott_samelson_positivity(Outcome& o) {
  for (const char* spec : {"A1", "A2", "B2"}) {
    auto tk = Toolkit::make(spec);
    const AffineWeylGroup& g = *tk.group;
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> len(0, 6), gen(0, g.num_generators() - 1);
    int n_omega = static_cast<int>(g.omegas().size());
    for (int i = 0; i < 200; ++i) {
      std::vector<GeneratorId> seq(static_cast<std::size_t>(len(rng)));
      for (auto& s : seq) s = gen(rng);
      int om = i % n_omega;
      KClass c = tk.kmod->bott_samelson_class(om, seq);
      std::string w;
      for (auto s : seq) w += " " + g.generator_name(s);
      o.check(c.is_nonnegative(), std::string(spec) + " BS(" + g.omega_name(om) + ";" + w + ") = " + c.str());
    }
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "Hecke relations in A1, A2, B2, G2", 5, hecke_relations},
      {2, "Bernstein presentation, radius 2, A1/A2/B2", 30, bernstein},
      {3, "T_{t_l} = T_{w^-1} theta_{wl} T_{w^-1}^-1, radius 3, A1/A2/B2", 30, conjugation},
      {4, "length and minimality of w_lambda, radius 4, ranks <= 3", 10, shortest_coset_elements},
      {5, "order on weights vs dominance, radius 3, A1/A2/B2", 20, order_on_weights},
      {6, "line bundle anchors and triangularity of standard classes", 20, class_anchors},
      {7, "costandard formula vs tensor product in K, A1/A2/B2", 60, reconciliation},
      {8, "dominant tilting classes vs Bott-Samelson classes", 10, tilting_vs_bott_samelson},
      {9, "q-analogues vs Freudenthal, support, M_rho^0 in A2", 30, q_analogues},
      {10, "positivity of 200 random Bott-Samelson classes per type", 60, bott_samelson_positivity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.budget_seconds;
    bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::printf("%s %2d %s (%zu checks, %.2fs / %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.title, o.checks, secs,
                c.budget_seconds);
    if (!o.ok) std::printf("     first failure: %s\n", o.first_failure.c_str());
    if (!in_time) std::printf("     over time budget\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
