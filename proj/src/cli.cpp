#include "exotic/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "exotic/json_io.hpp"
#include "exotic/parse.hpp"
#include "exotic/verify.hpp"

namespace exotic::cli {

namespace {

using json_io::json;
namespace fs = std::filesystem;

struct Options {
  bool json = false;
  std::string cache;
  std::uint64_t seed = 1;

  std::string spec;
  std::vector<std::string> args;
  std::string charfile;
  std::string tilt_char;
  std::string omega;
  int radius = 2;
  std::string suite = "all";
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<fs::path> cache_path(const Options& o) {
  if (!o.cache.empty()) {
    fs::path p(o.cache);
    if (fs::is_directory(p)) p /= "partitions.json";
    return p;
  }
  if (const char* dir = std::getenv("EXOTIC_CACHE_DIR"); dir && *dir) return fs::path(dir) / "partitions.json";
  return std::nullopt;
}

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out), tk_(Toolkit::make(o.spec)) {
    cache_ = cache_path(o);
    if (cache_) json_io::load_cache(*cache_, *tk_.chars);
  }
  ~Session() {
    if (!cache_) return;
    try {
      json_io::save_cache(*cache_, *tk_.chars);
    } catch (const std::exception& e) {
      std::cerr << "warning: could not write cache: " << e.what() << '\n';
    }
  }

  const Toolkit& tk() const { return tk_; }
  const AffineWeylGroup& g() const { return *tk_.group; }
  const RootSystem& rs() const { return tk_.group->roots(); }
  Weight weight(const std::string& text) const { return parse_weight_for(rs(), text); }

  void emit(const json& j, const std::string& text) const {
    if (o_.json) out_ << j.dump() << '\n';
    else out_ << text << '\n';
  }

 private:
  const Options& o_;
  std::ostream& out_;
  Toolkit tk_;
  std::optional<fs::path> cache_;
};

void cmd_rootinfo(const Session& s) {
  const RootSystem& rs = s.rs();
  const AffineWeylGroup& g = s.g();
  json cartan = json::array();
  std::ostringstream text;
  text << "type: " << rs.name() << "\nrank: " << rs.rank() << "\ncartan:\n";
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    text << " ";
    for (int j = 0; j < rs.rank(); ++j) {
      row.push_back(rs.cartan(i, j));
      text << ' ' << rs.cartan(i, j);
    }
    cartan.push_back(row);
    text << '\n';
  }
  json roots = json::array();
  for (const auto& pr : rs.positive_roots()) roots.push_back(json_io::to_json(pr.weight));
  json omegas = json::array(), gens = json::array();
  std::string om_text, gen_text;
  for (int i = 0; i < static_cast<int>(g.omegas().size()); ++i) {
    omegas.push_back(g.omega_name(i));
    om_text += (i ? " " : "") + g.omega_name(i);
  }
  for (GeneratorId k = 0; k < g.num_generators(); ++k) {
    gens.push_back(g.generator_name(k));
    gen_text += (k ? " " : "") + g.generator_name(k);
  }
  text << "positive roots: " << rs.positive_roots().size() << "\nweyl group order: " << rs.weyl_group_order()
       << "\ngenerators: " << gen_text << "\nomega: " << om_text;
  s.emit({{"type", rs.name()},
          {"rank", rs.rank()},
          {"cartan", cartan},
          {"positive_roots", roots},
          {"weyl_order", rs.weyl_group_order()},
          {"generators", gens},
          {"omega", omegas}},
         text.str());
}

void cmd_length(const Session& s, const Options& o) {
  AffineElement x = parse_element(s.g(), o.args.at(0));
  int l = s.g().length(x);
  s.emit({{"element", json_io::to_json(s.g(), x)}, {"length", l}}, std::to_string(l));
}

void cmd_reduced(const Session& s, const Options& o) {
  AffineElement x = parse_element(s.g(), o.args.at(0));
  ReducedWord rw = s.g().reduced_word(x);
  json gens = json::array();
  for (auto k : rw.word) gens.push_back(s.g().generator_name(k));
  std::string w = s.g().word_string(rw);
  s.emit({{"element", json_io::to_json(s.g(), x)}, {"omega", s.g().omega_name(rw.omega)}, {"word", gens}}, w);
}

void cmd_wlambda(const Session& s, const Options& o) {
  Weight l = s.weight(o.args.at(0));
  WLambda w = s.g().w_lambda(l);
  std::string word = s.g().element_string(w.element);
  s.emit({{"weight", json_io::to_json(l)},
          {"element", json_io::to_json(s.g(), w.element)},
          {"delta", w.delta},
          {"length", s.g().length(w.element)}},
         "element: " + word + "\ndelta: " + std::to_string(w.delta));
}

void cmd_bruhat(const Session& s, const Options& o) {
  AffineElement x = parse_element(s.g(), o.args.at(0));
  AffineElement y = parse_element(s.g(), o.args.at(1));
  bool leq = s.g().bruhat_leq(x, y);
  s.emit({{"leq", leq}}, leq ? "true" : "false");
}

void emit_hecke(const Session& s, const HeckeElement& x) {
  s.emit(json_io::to_json(*s.tk().hecke, x), s.tk().hecke->str(x));
}

void cmd_hecke_mul(const Session& s, const Options& o) {
  const HeckeAlgebra& H = *s.tk().hecke;
  BraidWord w = parse_braid(H, o.args.at(0)) + parse_braid(H, o.args.at(1));
  emit_hecke(s, H.evaluate(w));
}

void cmd_theta(const Session& s, const Options& o) { emit_hecke(s, s.tk().hecke->theta(s.weight(o.args.at(0)))); }

void emit_class(const Session& s, const KClass& c) { s.emit(json_io::to_json(c), c.str()); }
void emit_poly(const Session& s, const LaurentPoly& p) { s.emit(json_io::to_json(p), p.str()); }

void cmd_kclass(const Session& s, const Options& o, const std::string& kind) {
  const KModule& K = *s.tk().kmod;
  if (kind == "line") return emit_class(s, K.line_bundle_class(s.weight(o.args.at(0))));
  if (kind == "delta") return emit_class(s, K.delta_class(s.weight(o.args.at(0))));
  int om = s.g().parse_omega(o.omega);
  std::vector<GeneratorId> seq;
  for (const auto& arg : o.args)
    for (const auto& tok : tokenize_expression(arg)) seq.push_back(s.g().parse_generator(tok));
  emit_class(s, K.bott_samelson_class(om, seq));
}

void cmd_tilt(const Session& s, const Options& o, const std::string& kind) {
  const TiltMult& T = *s.tk().tilt;
  if (kind == "dominant") {
    std::optional<CharacterMultiset> tc;
    if (!o.tilt_char.empty()) tc = json_io::load_charset(o.tilt_char);
    Weight l = s.weight(o.args.at(0));
    if (!s.rs().is_dominant(l)) throw std::invalid_argument("weight " + l.str() + " is not dominant");
    return emit_class(s, T.dominant_tilting_class(l, tc));
  }
  CharacterMultiset V = json_io::load_charset(o.charfile);
  Weight mu = s.weight(o.args.at(0));
  emit_poly(s, kind == "std" ? T.std_mult(V, mu) : T.costd_mult(V, mu));
}

void cmd_reconcile(const Session& s, const Options& o) {
  CharacterMultiset V = json_io::load_charset(o.charfile);
  for (const auto& [w, n] : V.mults)
    if (w.rank() != s.rs().rank() || !s.rs().is_dominant(w)) throw std::invalid_argument("character weights must be dominant of the right rank");
  ReconcileReport r = s.tk().tilt->reconcile(V);
  std::string text = r.match ? "match\n" + r.from_tensor.str() : "mismatch";
  for (const auto& d : r.diffs)
    text += "\n  m" + d.weight.str() + ": tensor " + d.from_tensor.str() + ", formula " + d.from_formula.str();
  s.emit(json_io::to_json(r), text);
  if (!r.match) throw VerificationFailure("reconciliation mismatch");
}

void cmd_verify(const Session& s, const Options& o) {
  if (o.radius < 0) throw std::invalid_argument("radius must be nonnegative");
  std::vector<std::pair<std::string, VerificationReport>> reports;
  bool all = o.suite == "all";
  if (!all && o.suite != "bernstein" && o.suite != "module" && o.suite != "order")
    throw std::invalid_argument("unknown suite '" + o.suite + "'");
  if (all || o.suite == "bernstein") reports.emplace_back("bernstein", verify_bernstein_suite(s.tk(), o.radius));
  if (all || o.suite == "order") reports.emplace_back("order", verify_order_suite(s.tk(), o.radius));
  if (all || o.suite == "module") reports.emplace_back("module", verify_module_suite(s.tk(), o.radius, o.seed));
  bool ok = true;
  json suites = json::object();
  std::string text;
  for (const auto& [name, r] : reports) {
    ok = ok && r.ok;
    suites[name] = {{"ok", r.ok}, {"checks", r.checks}, {"failures", r.failures}};
    text += name + ": " + (r.ok ? "pass" : "FAIL") + " (" + std::to_string(r.checks) + " checks)\n";
    for (const auto& f : r.failures) text += "  " + f + "\n";
  }
  text += ok ? "status: pass" : "status: fail";
  s.emit({{"status", ok ? "pass" : "fail"}, {"spec", s.rs().name()}, {"radius", o.radius}, {"suites", suites}}, text);
  if (!ok) throw VerificationFailure("verification failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Braid group actions, exotic classes and graded multiplicities for affine Hecke algebras", "exotic"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--cache", o.cache, "Partition cache file or directory (default: $EXOTIC_CACHE_DIR)");
  app.add_option("--seed", o.seed, "Seed for randomized suites");

  auto spec_arg = [&](CLI::App* sub) { sub->add_option("spec", o.spec, "Root system, e.g. A2 or A1xA1")->required(); };
  auto args_arg = [&](CLI::App* sub, int n, const char* what) {
    sub->add_option("args", o.args, what)->required()->expected(n)->allow_extra_args(false);
  };

  auto* rootinfo = app.add_subcommand("rootinfo", "Cartan data, roots, Weyl group order, Omega");
  spec_arg(rootinfo);
  auto* length = app.add_subcommand("length", "Length of an element");
  spec_arg(length);
  args_arg(length, 1, "element expression");
  auto* reduced = app.add_subcommand("reduced", "Reduced word of an element");
  spec_arg(reduced);
  args_arg(reduced, 1, "element expression");
  auto* wlambda = app.add_subcommand("wlambda", "Shortest element of W t_lambda and delta(lambda)");
  spec_arg(wlambda);
  args_arg(wlambda, 1, "weight");
  auto* bruhat = app.add_subcommand("bruhat", "Bruhat comparison x <= y");
  spec_arg(bruhat);
  args_arg(bruhat, 2, "element expressions");
  auto* hmul = app.add_subcommand("hecke-mul", "Product of two braid expressions in H");
  spec_arg(hmul);
  args_arg(hmul, 2, "braid expressions");
  auto* theta = app.add_subcommand("theta", "Bernstein element theta_lambda in the standard basis");
  spec_arg(theta);
  args_arg(theta, 1, "weight");

  auto* kclass = app.add_subcommand("kclass", "Classes in K");
  kclass->require_subcommand(1);
  kclass->fallthrough();
  auto* kline = kclass->add_subcommand("line", "Line bundle class");
  spec_arg(kline);
  args_arg(kline, 1, "weight");
  auto* kdelta = kclass->add_subcommand("delta", "Standard class");
  spec_arg(kdelta);
  args_arg(kdelta, 1, "weight");
  auto* kbs = kclass->add_subcommand("bs", "Bott-Samelson class");
  spec_arg(kbs);
  kbs->add_option("omega", o.omega, "Length-zero twist: e, omega, omega<j> or omega[..]")->required();
  kbs->add_option("reflections", o.args, "Simple reflections s_1 ... s_r");

  auto* qan = app.add_subcommand("qanalogue", "Lusztig q-analogue M_lambda^mu(v)");
  spec_arg(qan);
  args_arg(qan, 2, "lambda mu");
  auto* gamma = app.add_subcommand("gamma", "Graded multiplicity of N(nu) in sections of O(lambda)");
  spec_arg(gamma);
  args_arg(gamma, 2, "lambda nu");

  auto* tilt = app.add_subcommand("tilt", "Standard, costandard and tilting multiplicities");
  tilt->require_subcommand(1);
  tilt->fallthrough();
  auto* tstd = tilt->add_subcommand("std", "Standard multiplicity");
  auto* tcostd = tilt->add_subcommand("costd", "Costandard multiplicity");
  for (auto* sub : {tstd, tcostd}) {
    spec_arg(sub);
    sub->add_option("charfile", o.charfile, "CharacterMultiset JSON file")->required();
    args_arg(sub, 1, "weight");
  }
  auto* tdom = tilt->add_subcommand("dominant", "Tilting class of a dominant weight");
  spec_arg(tdom);
  args_arg(tdom, 1, "dominant weight");
  tdom->add_option("--tilt-char", o.tilt_char, "Weyl-basis character of T(lambda)");

  auto* reconcile = app.add_subcommand("reconcile", "Compare the costandard formula with the tensor product in K");
  spec_arg(reconcile);
  reconcile->add_option("charfile", o.charfile, "CharacterMultiset JSON file")->required();

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  spec_arg(verify);
  verify->add_option("--radius", o.radius, "Weight box radius");
  verify->add_option("--suite", o.suite, "bernstein|module|order|all");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Session s(o, out);
    if (rootinfo->parsed()) cmd_rootinfo(s);
    else if (length->parsed()) cmd_length(s, o);
    else if (reduced->parsed()) cmd_reduced(s, o);
    else if (wlambda->parsed()) cmd_wlambda(s, o);
    else if (bruhat->parsed()) cmd_bruhat(s, o);
    else if (hmul->parsed()) cmd_hecke_mul(s, o);
    else if (theta->parsed()) cmd_theta(s, o);
    else if (kline->parsed()) cmd_kclass(s, o, "line");
    else if (kdelta->parsed()) cmd_kclass(s, o, "delta");
    else if (kbs->parsed()) cmd_kclass(s, o, "bs");
    else if (qan->parsed()) emit_poly(s, s.tk().chars->lusztig_q(s.weight(o.args.at(0)), s.weight(o.args.at(1))));
    else if (gamma->parsed()) emit_poly(s, s.tk().tilt->gamma_graded_char(s.weight(o.args.at(0)), s.weight(o.args.at(1))));
    else if (tstd->parsed()) cmd_tilt(s, o, "std");
    else if (tcostd->parsed()) cmd_tilt(s, o, "costd");
    else if (tdom->parsed()) cmd_tilt(s, o, "dominant");
    else if (reconcile->parsed()) cmd_reconcile(s, o);
    else if (verify->parsed()) cmd_verify(s, o);
  } catch (const VerificationFailure& e) {
    err << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace exotic::cli
