#include "exotic/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace exotic::json_io {

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (auto [e, c] : p.pairs()) out.push_back({e, c});
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a list of [exponent, coefficient] pairs");
  LaurentPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("bad polynomial term");
    p.add_term(t[0].get<int>(), t[1].get<LaurentPoly::Coeff>());
  }
  return p;
}

json to_json(const Weight& w) { return json(w.coords()); }

Weight weight_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight must be an integer list");
  return Weight(j.get<std::vector<Int>>());
}

json to_json(const AffineWeylGroup& g, const AffineElement& x) {
  const int r = g.rank();
  json rows = json::array();
  for (int i = 0; i < r; ++i) {
    json row = json::array();
    for (int k = 0; k < r; ++k) row.push_back(x.finite.matrix()[static_cast<std::size_t>(i * r + k)]);
    rows.push_back(std::move(row));
  }
  return {{"finite", rows}, {"translation", to_json(x.translation)}, {"word", g.element_string(x)}};
}

AffineElement element_from_json(const AffineWeylGroup& g, const json& j) {
  const RootSystem& rs = g.roots();
  const int r = rs.rank();
  std::vector<Int> flat;
  for (const auto& row : j.at("finite")) {
    for (const auto& v : row) flat.push_back(v.get<Int>());
  }
  if (static_cast<int>(flat.size()) != r * r) throw std::invalid_argument("finite matrix has the wrong size");
  Weight t = weight_from_json(j.at("translation"));
  if (t.rank() != r) throw std::invalid_argument("translation has the wrong rank");
  for (const auto& w : rs.weyl_group())
    if (w.matrix() == flat) return {w, t};
  throw std::invalid_argument("matrix is not an element of the Weyl group");
}

json to_json(const HeckeAlgebra& alg, const HeckeElement& x) {
  json out = json::array();
  const AffineWeylGroup& g = alg.group();
  for (const auto& [rw, c] : alg.sorted_terms(x)) out.push_back({{"element", to_json(g, g.evaluate(rw))}, {"poly", to_json(c)}});
  return out;
}

HeckeElement hecke_from_json(const AffineWeylGroup& g, const json& j) {
  HeckeElement x;
  for (const auto& t : j) x.add_term(element_from_json(g, t.at("element")), poly_from_json(t.at("poly")));
  return x;
}

json to_json(const KClass& c) {
  json out = json::array();
  for (const auto& [w, p] : c.terms()) out.push_back({{"weight", to_json(w)}, {"poly", to_json(p)}});
  return out;
}

KClass kclass_from_json(const json& j) {
  KClass c;
  for (const auto& t : j) c.add_term(weight_from_json(t.at("weight")), poly_from_json(t.at("poly")));
  return c;
}

json to_json(const CharacterMultiset& cm) {
  json mults = json::array();
  for (const auto& [w, n] : cm.mults) mults.push_back({{"weight", to_json(w)}, {"count", n}});
  return {{"basis", basis_name(cm.basis)}, {"mults", mults}};
}

CharacterMultiset charset_from_json(const json& j) {
  CharacterMultiset cm;
  cm.basis = parse_basis(j.at("basis").get<std::string>());
  for (const auto& t : j.at("mults")) {
    Int n = t.at("count").get<Int>();
    if (n < 0) throw std::invalid_argument("negative multiplicity in character");
    if (n > 0) cm.mults[weight_from_json(t.at("weight"))] += n;
  }
  return cm;
}

CharacterMultiset load_charset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read character file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed character file " + path.string() + ": " + e.what());
  }
  return charset_from_json(j);
}

json to_json(const ReconcileReport& r) {
  json detail = json::array();
  for (const auto& d : r.diffs)
    detail.push_back({{"weight", to_json(d.weight)}, {"tensor", to_json(d.from_tensor)}, {"formula", to_json(d.from_formula)}});
  return {{"status", r.match ? "match" : "mismatch"}, {"detail", detail}, {"class", to_json(r.from_tensor)}};
}

namespace {

json read_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return {};
  try {
    json j;
    in >> j;
    if (!j.is_object() || j.value("format", "") != kCacheFormat || j.value("version", -1) != kCacheVersion) return {};
    return j;
  } catch (const json::exception&) {
    return {};
  }
}

}  // namespace

bool load_cache(const std::filesystem::path& path, CharacterRing& ring) {
  json j = read_cache(path);
  if (j.is_null()) return false;
  const std::string key = ring.roots().name();
  if (!j.contains("tables") || !j["tables"].contains(key)) return false;
  std::map<std::vector<Int>, LaurentPoly> table;
  try {
    for (const auto& t : j["tables"][key]) {
      auto coords = t.at("root_coords").get<std::vector<Int>>();
      if (static_cast<int>(coords.size()) != ring.roots().rank()) return false;
      table.emplace(std::move(coords), poly_from_json(t.at("poly")));
    }
  } catch (const std::exception&) {
    return false;
  }
  ring.load_partition_table(table);
  return true;
}

void save_cache(const std::filesystem::path& path, const CharacterRing& ring) {
  json j = read_cache(path);
  if (j.is_null()) j = {{"format", kCacheFormat}, {"version", kCacheVersion}, {"tables", json::object()}};
  json table = json::array();
  for (const auto& [coords, p] : ring.partition_table()) table.push_back({{"root_coords", coords}, {"poly", to_json(p)}});
  j["tables"][ring.roots().name()] = std::move(table);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace exotic::json_io
