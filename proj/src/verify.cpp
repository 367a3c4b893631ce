#include "exotic/verify.hpp"

#include <random>
#include <stdexcept>

namespace exotic {

Toolkit Toolkit::make(std::string_view spec) {
  Toolkit tk;
  tk.group = AffineWeylGroup::make(spec);
  tk.hecke = std::make_shared<HeckeAlgebra>(tk.group);
  tk.kmod = std::make_shared<KModule>(tk.hecke);
  tk.chars = std::make_shared<CharacterRing>(tk.group->roots());
  tk.tilt = std::make_shared<TiltMult>(tk.kmod, tk.chars);
  return tk;
}

VerificationReport verify_bernstein_suite(const Toolkit& tk, int radius) {
  VerificationReport rep = verify_hecke_relations(*tk.hecke);
  rep.merge(verify_bernstein(*tk.hecke, radius));
  rep.merge(verify_t_translation_conjugation(*tk.hecke, radius));
  return rep;
}

VerificationReport verify_order_suite(const Toolkit& tk, int radius) {
  VerificationReport rep;
  const AffineWeylGroup& g = *tk.group;
  const RootSystem& rs = g.roots();
  auto box = weight_box(rs.rank(), -radius, radius);

  for (const auto& l : box) {
    DominantRep d = rs.dominant_rep(l);
    AffineElement w{d.element, l};
    int lw = g.length(w);
    rep.record(lw == g.length(g.translation(l)) - d.delta, "l(w_lambda) != l(t_lambda) - delta for " + l.str());
    bool minimal = true;
    for (GeneratorId s = 0; s < rs.rank(); ++s) minimal = minimal && g.length(g.left_multiply(s, w)) > lw;
    rep.record(minimal, "w_lambda has a finite left descent for " + l.str());
  }

  std::vector<Weight> dominant;
  for (const auto& l : box)
    if (rs.is_dominant(l)) dominant.push_back(l);
  for (const auto& a : dominant)
    for (const auto& b : dominant) {
      if (!rs.same_coset(a, b)) continue;
      rep.record(g.order_leq(a, b) == rs.dominance_leq(a, b), "order and dominance differ on " + a.str() + ", " + b.str());
    }
  for (const auto& l : dominant) {
    auto orbit = rs.weyl_orbit(l);
    for (const auto& a : orbit)
      for (const auto& b : orbit)
        rep.record(g.order_leq(a, b) == rs.dominance_leq(a, b), "order and dominance differ on " + a.str() + ", " + b.str());
  }
  for (const auto& a : box)
    for (const auto& b : box) {
      if (rs.same_coset(a, b)) continue;
      rep.record(!g.order_leq(a, b), "weights in different cosets compare: " + a.str() + ", " + b.str());
    }
  return rep;
}

VerificationReport verify_bott_samelson_positivity(const Toolkit& tk, std::uint64_t seed, int samples, int max_length) {
  VerificationReport rep;
  const AffineWeylGroup& g = *tk.group;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_omega(0, static_cast<int>(g.omegas().size()) - 1);
  std::uniform_int_distribution<int> pick_len(0, max_length);
  std::uniform_int_distribution<int> pick_gen(0, g.num_generators() - 1);
  for (int i = 0; i < samples; ++i) {
    int om = pick_omega(rng);
    std::vector<GeneratorId> seq(static_cast<std::size_t>(pick_len(rng)));
    for (auto& s : seq) s = pick_gen(rng);
    KClass c = tk.kmod->bott_samelson_class(om, seq);
    std::string desc = g.omega_name(om);
    for (auto s : seq) desc += " " + g.generator_name(s);
    rep.record(c.is_nonnegative(), "Bott-Samelson class has a negative coefficient: " + desc + " -> " + c.str());
  }
  return rep;
}

VerificationReport verify_module_suite(const Toolkit& tk, int radius, std::uint64_t seed, int random_samples) {
  VerificationReport rep;
  const AffineWeylGroup& g = *tk.group;
  const RootSystem& rs = g.roots();
  const KModule& K = *tk.kmod;
  const HeckeAlgebra& H = *tk.hecke;
  const LaurentPoly v = LaurentPoly::v(1), vinv = LaurentPoly::v(-1);
  auto box = weight_box(rs.rank(), -radius, radius);

  for (const auto& l : box) {
    KClass m = K.basis(l);
    for (GeneratorId s = 0; s < g.num_generators(); ++s) {
      KClass a = K.act_simple(m, s) + v * m;
      KClass q = K.act_simple(a, s) - vinv * a;
      rep.record(q.is_zero(), "quadratic relation fails on m" + l.str() + " for " + g.generator_name(s));
    }
    try {
      K.nabla_class(l);
      rep.record(true, "");
    } catch (const std::logic_error& e) {
      rep.record(false, e.what());
    }
  }

  if (rs.weyl_group_order() <= 10000) {
    for (const auto& w : rs.weyl_group()) {
      KClass c = K.act_word(K.origin(), H.word_of(g.finite(w)));
      rep.record(c == LaurentPoly::v(-w.length()) * K.origin(), "m_0 T_w != v^-l(w) m_0");
    }
  }

  for (const auto& l : box) {
    KClass lb = K.line_bundle_class(l);
    if (rs.is_dominant(l)) rep.record(lb == K.basis(l), "line bundle class of dominant " + l.str() + " is not m_lambda");
    if (rs.is_dominant(-l)) {
      int delta = K.w_lambda(l).delta;
      rep.record(lb == LaurentPoly::v(delta) * K.delta_class(l),
                 "line bundle class of antidominant " + l.str() + " is not v^delta times the standard class");
    }
    KClass d = K.delta_class(l);
    bool tri = d.coeff(l) == LaurentPoly(1);
    for (const auto& [mu, c] : d.terms())
      if (mu != l && !g.order_leq(mu, l)) tri = false;
    rep.record(tri, "standard class of " + l.str() + " is not unitriangular: " + d.str());

    // [nabla_0^lambda] = v^delta m_lambda and T_s^-1 on it.
    const int dl = K.w_lambda(l).delta;
    KClass nab = LaurentPoly::v(dl) * K.basis(l);
    for (GeneratorId s = 0; s < rs.rank(); ++s) {
      KClass act = K.act_simple_inverse(nab, s);
      if (l[s] == 0) {
        rep.record(act == v * nab, "T_s^-1 does not scale the costandard class of " + l.str());
      } else if (l[s] > 0) {
        Weight sl = l - l[s] * rs.simple_roots()[static_cast<std::size_t>(s)];
        KClass target = LaurentPoly::v(K.w_lambda(sl).delta - 1) * K.basis(sl);
        rep.record(act == target, "T_s^-1 does not move the costandard class of " + l.str() + " to s lambda");
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_gen(0, g.num_generators() - 1);
  std::uniform_int_distribution<int> pick_omega(0, static_cast<int>(g.omegas().size()) - 1);
  std::uniform_int_distribution<int> pick_len(0, 4);
  std::uniform_int_distribution<Int> pick_coord(-radius, radius);
  auto random_element = [&] {
    std::vector<GeneratorId> word(static_cast<std::size_t>(pick_len(rng)));
    for (auto& s : word) s = pick_gen(rng);
    return g.evaluate(pick_omega(rng), word);
  };
  const int axiom_samples = std::max(1, random_samples / 10);
  for (int i = 0; i < axiom_samples; ++i) {
    Weight l = rs.zero();
    for (int k = 0; k < rs.rank(); ++k) l[k] = pick_coord(rng);
    HeckeElement x = H.basis(random_element()), y = H.basis(random_element());
    KClass c = K.basis(l);
    KClass lhs = K.act_hecke(c, H.multiply(x, y));
    KClass rhs = K.act_hecke(K.act_hecke(c, x), y);
    rep.record(lhs == rhs, "module axiom fails on m" + l.str() + " with " + H.str(x) + " and " + H.str(y));
  }

  rep.merge(verify_bott_samelson_positivity(tk, seed ^ 0x9e3779b97f4a7c15ULL, random_samples, 6));

  const int rec_radius = std::min(radius, 2);
  for (const auto& nu : weight_box(rs.rank(), 0, rec_radius)) {
    CharacterMultiset V;
    V.basis = CharacterBasis::Good;
    V.mults.emplace(nu, 1);
    ReconcileReport r = tk.tilt->reconcile(V);
    rep.record(r.match, "costandard formula disagrees with the tensor product for N" + nu.str());
    CharacterMultiset W = V;
    W.basis = CharacterBasis::Weyl;
    rep.record(tk.tilt->std_class(W) == r.from_tensor,
               "standard formula disagrees with the tensor product for M" + nu.str());
  }
  return rep;
}

}  // namespace exotic
