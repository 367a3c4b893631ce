#include "exotic/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace exotic {

namespace {

struct Factor {
  std::string base;
  bool inverse = false;
};

Factor split_factor(const std::string& token) {
  Factor f{token, false};
  constexpr std::string_view suffix = "^-1";
  if (token.size() > suffix.size() && token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0) {
    f.base = token.substr(0, token.size() - suffix.size());
    f.inverse = true;
  }
  return f;
}

bool starts_with(const std::string& s, std::string_view p) { return s.compare(0, p.size(), p) == 0; }

}  // namespace

std::vector<std::string> tokenize_expression(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced ']' in expression");
    bool sep = depth == 0 && (std::isspace(static_cast<unsigned char>(ch)) || ch == '*');
    if (sep) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced '[' in expression");
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Weight parse_weight_for(const RootSystem& rs, std::string_view text) {
  Weight w = parse_weight(text);
  if (w.rank() != rs.rank())
    throw std::invalid_argument("weight " + w.str() + " has rank " + std::to_string(w.rank()) + ", expected " +
                                std::to_string(rs.rank()));
  return w;
}

AffineElement parse_element(const AffineWeylGroup& g, std::string_view text) {
  const RootSystem& rs = g.roots();
  AffineElement x = g.identity();
  auto tokens = tokenize_expression(text);
  if (tokens.empty()) throw std::invalid_argument("empty element expression");
  for (const auto& tok : tokens) {
    Factor f = split_factor(tok);
    AffineElement y;
    if (f.base == "e") y = g.identity();
    else if (f.base == "w0") y = g.finite(rs.longest_element());
    else if (starts_with(f.base, "t[")) y = g.translation(parse_weight_for(rs, f.base.substr(1)));
    else if (starts_with(f.base, "theta")) throw std::invalid_argument("theta is not a group element");
    else if (starts_with(f.base, "omega")) y = g.omega(g.parse_omega(f.base));
    else y = g.generator(g.parse_generator(f.base));
    x = g.multiply(x, f.inverse ? g.inverse(y) : y);
  }
  return x;
}

BraidWord parse_braid(const HeckeAlgebra& alg, std::string_view text) {
  const AffineWeylGroup& g = alg.group();
  const RootSystem& rs = g.roots();
  BraidWord word;
  auto tokens = tokenize_expression(text);
  if (tokens.empty()) throw std::invalid_argument("empty braid expression");
  for (const auto& tok : tokens) {
    Factor f = split_factor(tok);
    BraidWord piece;
    if (f.base == "e") {
    } else if (f.base == "w0") {
      piece = alg.word_of(g.finite(rs.longest_element()));
    } else if (starts_with(f.base, "t[")) {
      piece = alg.word_of(g.translation(parse_weight_for(rs, f.base.substr(1))));
    } else if (starts_with(f.base, "theta[")) {
      piece = alg.theta_word(parse_weight_for(rs, f.base.substr(5)));
    } else if (starts_with(f.base, "omega")) {
      int om = g.parse_omega(f.base);
      if (om != 0) piece.push_back(BraidWord::omega(om));
    } else {
      piece.push_back(BraidWord::simple(g.parse_generator(f.base)));
    }
    word += f.inverse ? piece.inverse() : piece;
  }
  return word;
}

}  // namespace exotic
