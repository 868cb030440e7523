#include "qtwist/exactalg/poly_io.hpp"

#include <cctype>
#include <vector>

#include "qtwist/errors.hpp"

namespace qtwist::exactalg {

nlohmann::json to_json(const LaurentPoly& p) {
  std::vector<Var> used;
  for (Var v : kAllVars) {
    if (p.uses(v)) used.push_back(v);
  }
  nlohmann::json vars = nlohmann::json::array();
  for (Var v : used) vars.push_back(std::string(var_name(v)));
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::json e = nlohmann::json::array();
    for (Var v : used) e.push_back(it->mono.exponent(v));
    terms.push_back({{"c", it->coeff.get_str()}, {"e", std::move(e)}});
  }
  return {{"vars", std::move(vars)}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
    throw ParseError("polynomial JSON needs \"vars\" and \"terms\"", 1, 1);
  }
  std::vector<Var> vars;
  for (const auto& name : j.at("vars")) {
    auto v = parse_var(name.get<std::string>());
    if (!v) throw ParseError("unknown variable '" + name.get<std::string>() + "'", 1, 1);
    vars.push_back(*v);
  }
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto& e = t.at("e");
    if (e.size() != vars.size()) throw ParseError("exponent vector length mismatch", 1, 1);
    Monomial m;
    for (std::size_t i = 0; i < vars.size(); ++i) m.set(vars[i], m.exponent(vars[i]) + e[i].get<int>());
    mpz_class c;
    if (c.set_str(t.at("c").get<std::string>(), 10) != 0) {
      throw ParseError("malformed coefficient '" + t.at("c").get<std::string>() + "'", 1, 1);
    }
    terms.push_back({m, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

nlohmann::json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RatFunc ratfunc_from_json(const nlohmann::json& j) {
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    for (;;) {
      Term t = parse_term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  int exponent() {
    skip_ws();
    bool paren = false;
    if (!at_end() && peek() == '(') {
      paren = true;
      ++pos_;
      skip_ws();
    }
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    std::string d = digits();
    if (d.size() > 9) fail("exponent out of range");
    if (paren) {
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return sign * std::stoi(d);
  }

  void factor(Term& t) {
    skip_ws();
    if (at_end()) fail("expected a factor");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff *= mpz_class(digits());
      return;
    }
    std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a variable or a number");
    std::string_view name = s_.substr(start, pos_ - start);
    auto v = parse_var(name);
    if (!v) {
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    int e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      e = exponent();
    }
    t.mono.set(*v, t.mono.exponent(*v) + e);
  }

  Term parse_term() {
    Term t{Monomial{}, 1};
    factor(t);
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(t);
    }
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return TextParser(text).parse(); }

}  // namespace qtwist::exactalg
