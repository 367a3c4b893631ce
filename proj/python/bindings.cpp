#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exotic/cli.hpp"
#include "exotic/json_io.hpp"
#include "exotic/parse.hpp"
#include "exotic/verify.hpp"

namespace py = pybind11;
using namespace exotic;

namespace {

using PolyTerms = std::vector<std::pair<int, long long>>;

PolyTerms terms(const LaurentPoly& p) {
  PolyTerms out;
  for (const auto& [e, c] : p.terms()) out.emplace_back(e, static_cast<long long>(c));
  return out;
}

std::vector<std::pair<std::vector<long long>, PolyTerms>> class_terms(const KClass& c) {
  std::vector<std::pair<std::vector<long long>, PolyTerms>> out;
  for (const auto& [w, p] : c.terms()) {
    std::vector<long long> key(w.coords().begin(), w.coords().end());
    out.emplace_back(std::move(key), terms(p));
  }
  return out;
}

class System {
 public:
  explicit System(const std::string& spec) : tk_(Toolkit::make(spec)) {}

  std::string name() const { return tk_.group->roots().name(); }
  int rank() const { return tk_.group->rank(); }
  long long weyl_order() const { return static_cast<long long>(tk_.group->roots().weyl_group_order()); }
  std::vector<std::string> omegas() const {
    std::vector<std::string> out;
    for (int i = 0; i < static_cast<int>(tk_.group->omegas().size()); ++i) out.push_back(tk_.group->omega_name(i));
    return out;
  }
  int length(const std::string& expr) const { return tk_.group->length(parse_element(*tk_.group, expr)); }
  std::string reduced_word(const std::string& expr) const {
    return tk_.group->word_string(tk_.group->reduced_word(parse_element(*tk_.group, expr)));
  }
  bool bruhat_leq(const std::string& x, const std::string& y) const {
    return tk_.group->bruhat_leq(parse_element(*tk_.group, x), parse_element(*tk_.group, y));
  }
  std::pair<std::string, int> w_lambda(const std::string& wt) const {
    WLambda w = tk_.group->w_lambda(weight(wt));
    return {tk_.group->element_string(w.element), w.delta};
  }
  bool order_leq(const std::string& a, const std::string& b) const { return tk_.group->order_leq(weight(a), weight(b)); }
  std::string theta(const std::string& wt) const { return tk_.hecke->str(tk_.hecke->theta(weight(wt))); }
  std::string hecke_eval(const std::string& expr) const {
    return tk_.hecke->str(tk_.hecke->evaluate(parse_braid(*tk_.hecke, expr)));
  }
  std::string line(const std::string& wt) const { return tk_.kmod->line_bundle_class(weight(wt)).str(); }
  std::string delta(const std::string& wt) const { return tk_.kmod->delta_class(weight(wt)).str(); }
  std::string bott_samelson(const std::string& omega, const std::vector<std::string>& seq) const {
    return bs(omega, seq).str();
  }
  std::vector<std::pair<std::vector<long long>, PolyTerms>> bott_samelson_terms(const std::string& omega,
                                                                  const std::vector<std::string>& seq) const {
    return class_terms(bs(omega, seq));
  }
  PolyTerms qanalogue(const std::string& l, const std::string& mu) const {
    return terms(tk_.chars->lusztig_q(weight(l), weight(mu)));
  }
  long long weight_multiplicity(const std::string& l, const std::string& mu) const {
    return static_cast<long long>(tk_.chars->freudenthal_mult(weight(l), weight(mu)));
  }
  std::string tilting(const std::string& wt) const { return tk_.tilt->dominant_tilting_class(weight(wt)).str(); }
  bool reconcile(const std::string& wt) const {
    CharacterMultiset N;
    N.basis = CharacterBasis::Good;
    N.mults.emplace(weight(wt), 1);
    return tk_.tilt->reconcile(N).match;
  }
  bool verify(int radius, unsigned long long seed) const {
    return verify_bernstein_suite(tk_, radius).ok && verify_order_suite(tk_, radius).ok &&
           verify_module_suite(tk_, radius, seed).ok;
  }

 private:
  Weight weight(const std::string& text) const { return parse_weight_for(tk_.group->roots(), text); }
  KClass bs(const std::string& omega, const std::vector<std::string>& seq) const {
    std::vector<GeneratorId> ids;
    for (const auto& s : seq) ids.push_back(tk_.group->parse_generator(s));
    return tk_.kmod->bott_samelson_class(tk_.group->parse_omega(omega), ids);
  }

  Toolkit tk_;
};

std::tuple<int, std::string, std::string> run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_exotic, m) {
  m.doc() = "Extended affine Hecke algebras, exotic K-classes and graded tilting multiplicities";
  py::class_<System>(m, "System")
      .def(py::init<const std::string&>(), py::arg("spec"))
      .def_property_readonly("name", &System::name)
      .def_property_readonly("rank", &System::rank)
      .def_property_readonly("weyl_order", &System::weyl_order)
      .def_property_readonly("omegas", &System::omegas)
      .def("length", &System::length)
      .def("reduced_word", &System::reduced_word)
      .def("bruhat_leq", &System::bruhat_leq)
      .def("w_lambda", &System::w_lambda)
      .def("order_leq", &System::order_leq)
      .def("theta", &System::theta)
      .def("hecke_eval", &System::hecke_eval)
      .def("line", &System::line)
      .def("delta", &System::delta)
      .def("bott_samelson", &System::bott_samelson, py::arg("omega"), py::arg("seq") = std::vector<std::string>{})
      .def("bott_samelson_terms", &System::bott_samelson_terms, py::arg("omega"),
           py::arg("seq") = std::vector<std::string>{})
      .def("qanalogue", &System::qanalogue)
      .def("weight_multiplicity", &System::weight_multiplicity)
      .def("tilting", &System::tilting)
      .def("reconcile", &System::reconcile)
      .def("verify", &System::verify, py::arg("radius") = 2, py::arg("seed") = 1);
  m.def("run_cli", &run_cli, py::arg("args"), "Run the command-line front end; returns (exit code, stdout, stderr)");
}
