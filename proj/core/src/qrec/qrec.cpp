#include "qtwist/qrec/qrec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "qtwist/errors.hpp"
#include "qtwist/exactalg/qpoch.hpp"
#include "qtwist/exactalg/upoly.hpp"

namespace qtwist::qrec {

using exactalg::Monomial;
using exactalg::QSum;
using exactalg::UPoly;

namespace {

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line, std::size_t offset = 0)
      : text_(text), line_(line), offset_(offset) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, offset_ + pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a word");
    return std::string(text_.substr(start, pos_ - start));
  }
  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  mpz_class unsigned_integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }
  int signed_int(const char* what) {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail(what);
    }
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

// <c>*q^<a>*N^<b> [+ ...]
LaurentPoly parse_qn_poly(LineCursor& cur) {
  if (cur.at_end()) cur.fail("expected a polynomial");
  LaurentPoly out;
  bool first = true;
  while (!cur.at_end()) {
    int sign = 1;
    if (cur.accept("+")) {
    } else if (cur.accept("-")) {
      sign = -1;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    mpz_class c = 1;
    Monomial mono;
    bool any = false;
    if (cur.at_digit()) {
      c = cur.unsigned_integer();
      any = true;
    }
    while (true) {
      if (any && !cur.accept("*")) break;
      char v = cur.peek();
      if (v != 'q' && v != 'N') {
        if (std::isalpha(static_cast<unsigned char>(v))) cur.fail(std::string("unknown variable '") + v + "'");
        cur.fail("expected a term");
      }
      cur.accept(std::string_view(&v, 1));
      int e = 1;
      if (cur.accept("^")) {
        if (cur.accept("(")) {
          e = cur.signed_int("malformed exponent");
          cur.expect(")");
        } else {
          e = cur.signed_int("malformed exponent");
        }
      }
      Var var = v == 'q' ? Var::q : Var::N;
      mono.set(var, mono.exponent(var) + e);
      any = true;
    }
    out += LaurentPoly::monomial(mono, sign * c);
  }
  return out;
}

std::string format_qn_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0*q^0*N^0";
  std::vector<exactalg::Term> terms = p.terms();
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::pair{a.mono.exponent(Var::N), a.mono.exponent(Var::q)} <
           std::pair{b.mono.exponent(Var::N), b.mono.exponent(Var::q)};
  });
  std::string out;
  for (const auto& t : terms) {
    mpz_class c = abs(t.coeff);
    if (out.empty()) {
      if (t.coeff < 0) out += "-";
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    out += c.get_str() + "*q^" + std::to_string(t.mono.exponent(Var::q)) + "*N^" +
           std::to_string(t.mono.exponent(Var::N));
  }
  return out;
}

void parse_header(LineCursor& cur, RecurrenceSpec& spec) {
  cur.expect("recurrence");
  spec.name = cur.word();
  bool have_kind = false, have_knot = false;
  while (!cur.at_end()) {
    std::string field = cur.word();
    if (field.starts_with("kind=")) {
      std::string v = field.substr(5);
      if (v == "kfree") {
        spec.kind = Kind::KFree;
      } else if (v == "inhom") {
        spec.kind = Kind::Inhomogeneous;
      } else {
        cur.fail("unknown kind '" + v + "'");
      }
      have_kind = true;
    } else if (field.starts_with("knot=")) {
      try {
        spec.knot = jones::parse_knot(field.substr(5));
      } catch (const DomainError& e) {
        cur.fail(e.what());
      }
      have_knot = true;
    } else {
      cur.fail("unknown field '" + field + "'");
    }
  }
  if (!have_kind) cur.fail("missing kind=");
  if (!have_knot) cur.fail("missing knot=");
}

RecurrenceTerm parse_term(std::string_view line, std::size_t line_no) {
  LineCursor cur(line, line_no);
  cur.expect("term");
  cur.expect("shift=(");
  RecurrenceTerm t;
  t.shift.push_back(cur.signed_int("expected an integer shift"));
  while (cur.accept(",")) t.shift.push_back(cur.signed_int("expected an integer shift"));
  cur.expect(")");
  cur.expect("num=");
  const std::size_t num_start = cur.pos();
  const std::size_t den_at = line.find("den=", num_start);
  if (den_at == std::string_view::npos) cur.fail("missing den=");
  LineCursor num_cur(line.substr(num_start, den_at - num_start), line_no, num_start);
  LaurentPoly num = parse_qn_poly(num_cur);
  LineCursor den_cur(line.substr(den_at + 4), line_no, den_at + 4);
  LaurentPoly den = parse_qn_poly(den_cur);
  if (den.is_zero()) den_cur.fail("zero denominator");
  t.coeff = RatFunc(std::move(num), std::move(den));
  return t;
}

void validate(const RecurrenceSpec& spec, std::size_t last_line) {
  auto fail = [&](const std::string& what) { throw ParseError(what, last_line, 1); };
  if (spec.terms.size() < 2) fail("a recurrence needs at least two terms");
  const std::size_t arity = spec.kind == Kind::KFree ? 3 : 1;
  std::set<int> offsets;
  for (const auto& t : spec.terms) {
    if (t.shift.size() != arity) fail("shift has " + std::to_string(t.shift.size()) + " entries, expected " +
                                      std::to_string(arity));
    if (spec.kind == Kind::Inhomogeneous && !offsets.insert(t.shift[0]).second) {
      fail("repeated shift " + std::to_string(t.shift[0]));
    }
  }
}

}  // namespace

std::string_view kind_name(Kind k) { return k == Kind::KFree ? "kfree" : "inhom"; }

RecurrenceSpec parse_recurrence(std::string_view text) {
  RecurrenceSpec spec;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineCursor cur(line, line_no);
    if (cur.at_end()) continue;
    if (!have_header) {
      parse_header(cur, spec);
      have_header = true;
    } else {
      spec.terms.push_back(parse_term(line, line_no));
    }
  }
  if (!have_header) throw ParseError("empty recurrence file", std::max<std::size_t>(line_no, 1), 1);
  validate(spec, line_no);
  return spec;
}

RecurrenceSpec load_recurrence(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_recurrence(ss.str());
}

std::string serialize(const RecurrenceSpec& spec) {
  std::string out = "recurrence " + spec.name + " kind=" + std::string(kind_name(spec.kind)) +
                    " knot=" + jones::knot_name(spec.knot) + "\n";
  for (const auto& t : spec.terms) {
    out += "term shift=(";
    for (std::size_t i = 0; i < t.shift.size(); ++i) out += (i ? "," : "") + std::to_string(t.shift[i]);
    out += ") num= " + format_qn_poly(t.coeff.num()) + " den= " + format_qn_poly(t.coeff.den()) + "\n";
  }
  return out;
}

RatFunc specialize_coefficient(const RatFunc& coeff, int n) {
  return RatFunc(jones::specialize_indices(coeff.num(), n, 0, 0), jones::specialize_indices(coeff.den(), n, 0, 0));
}

std::string_view grid_mode_name(GridMode m) { return m == GridMode::Interior ? "interior" : "full"; }

GridMode parse_grid_mode(std::string_view text) {
  if (text == "interior") return GridMode::Interior;
  if (text == "full") return GridMode::Full;
  throw DomainError("unknown grid mode '" + std::string(text) + "'");
}

RatFunc kfree_residual(const RecurrenceSpec& spec, int n, int k, int l) {
  if (spec.kind != Kind::KFree) throw DomainError("kfree_residual needs a k-free recurrence");
  std::vector<RatFunc> coeffs;
  coeffs.reserve(spec.terms.size());
  for (const auto& t : spec.terms) coeffs.push_back(specialize_coefficient(t.coeff, n));
  LaurentPoly common = 1;
  for (const auto& c : coeffs) common *= c.den();

  QSum sum(Var::q);
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    const auto& s = spec.terms[i].shift;
    LaurentPoly mult = coeffs[i].num() * exactalg::exact_divide(common, coeffs[i].den());
    sum.add(jones::summand_term(spec.knot, n + s[0], k + s[1], l + s[2]), mult);
  }
  if (sum.is_zero()) return {};
  return sum.to_ratfunc() / RatFunc(common);
}

KFreeReport check_kfree(const RecurrenceSpec& spec, int n_min, int n_max, GridMode mode) {
  if (spec.kind != Kind::KFree) throw DomainError("check_kfree needs a k-free recurrence");
  KFreeReport r;
  r.n_min = n_min;
  r.n_max = n_max;
  r.mode = mode;
  for (int n = std::max(n_min, 1); n <= n_max; ++n) {
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l <= k; ++l) {
        if (mode == GridMode::Interior) {
          bool inside = std::all_of(spec.terms.begin(), spec.terms.end(), [&](const RecurrenceTerm& t) {
            return n + t.shift[0] >= 1 && k + t.shift[1] >= 0 && l + t.shift[2] >= 0;
          });
          if (!inside) continue;
        }
        ++r.points;
        RatFunc v = kfree_residual(spec, n, k, l);
        if (!v.is_zero()) r.nonzero.push_back({n, k, l, std::move(v)});
      }
    }
  }
  if (r.points == 0) {
    r.note = "empty " + std::string(grid_mode_name(mode)) + " grid for " + std::to_string(n_min) +
             " <= n <= " + std::to_string(n_max);
  }
  return r;
}

Q1Result specialize_q1(const RecurrenceSpec& spec) {
  if (spec.kind != Kind::Inhomogeneous) throw DomainError("specialize_q1 needs a sequence recurrence");
  auto at_q1 = [](const LaurentPoly& f) {
    return f.map_monomials([](const Monomial& mono) {
      return std::pair{Monomial::of(Var::m, 2 * mono.exponent(Var::N)), 1};
    });
  };

  struct Piece {
    int shift;
    LaurentPoly num;  // in m, monomial part of the denominator already moved here
    UPoly den;        // primitive, positive leading coefficient
    mpz_class content;
  };
  std::vector<Piece> pieces;
  for (const auto& t : spec.terms) {
    LaurentPoly num = at_q1(t.coeff.num());
    LaurentPoly den = at_q1(t.coeff.den());
    if (den.is_zero()) {
      throw DomainError("coefficient of J(n+" + std::to_string(t.shift[0]) + ") has a vanishing denominator at q = 1");
    }
    Monomial removed;
    den = exactalg::strip_monomial(den, &removed);
    num = num.times(Monomial{} / removed);
    UPoly d = UPoly::from_laurent(den, Var::m);
    if (d.lead() < 0) {
      d = -d;
      num = -num;
    }
    mpz_class c = d.content();
    pieces.push_back({t.shift[0], std::move(num), d.primitive_part(), c});
  }

  UPoly lcm_poly(std::vector<mpz_class>{1});
  mpz_class lcm_int = 1;
  for (const auto& p : pieces) {
    UPoly g = UPoly::gcd(lcm_poly, p.den);
    lcm_poly = UPoly::exact_quotient(lcm_poly * p.den, g);
    lcm_int = lcm(lcm_int, p.content);
  }
  if (lcm_poly.lead() < 0) lcm_poly = -lcm_poly;
  const UPoly common = UPoly(std::vector<mpz_class>{lcm_int}) * lcm_poly;

  LaurentPoly total;
  for (const auto& p : pieces) {
    UPoly cofactor = UPoly::exact_quotient(common, UPoly(std::vector<mpz_class>{p.content}) * p.den);
    total += (p.num * cofactor.to_laurent(Var::m)).times(Monomial::of(Var::l, p.shift));
  }

  Q1Result r;
  r.denominator = common.to_laurent(Var::m);
  if (auto q = exactalg::try_divide(total, r.denominator)) {
    r.exact = true;
    r.poly = *std::move(q);
    return r;
  }
  for (int j = total.min_degree(Var::l); j <= total.max_degree(Var::l); ++j) {
    LaurentPoly cj = total.coefficient(Var::l, j);
    if (cj.is_zero()) continue;
    Monomial removed;
    LaurentPoly stripped = exactalg::strip_monomial(cj, &removed);
    UPoly rem = UPoly::pseudo_remainder(UPoly::from_laurent(stripped, Var::m), common);
    r.remainder += rem.to_laurent(Var::m).times(removed * Monomial::of(Var::l, j));
  }
  return r;
}

CompareReport compare_factor(const LaurentPoly& poly, const LaurentPoly& reference) {
  CompareReport r;
  const LaurentPoly abelian = LaurentPoly(1) + LaurentPoly::monomial(Monomial::of(Var::m, 2) * Monomial::of(Var::l));
  r.factor = poly;
  while (!r.factor.is_zero()) {
    auto q = exactalg::try_divide(r.factor, abelian);
    if (!q) break;
    r.factor = *std::move(q);
    ++r.abelian_power;
  }
  r.unit = exactalg::unit_ratio(r.factor, reference);
  if (!r.unit && !r.factor.is_zero() && !reference.is_zero()) {
    const auto& a = r.factor.leading();
    const auto& b = reference.leading();
    if (abs(a.coeff) == abs(b.coeff)) r.unit = Term{a.mono / b.mono, a.coeff == b.coeff ? 1 : -1};
  }
  LaurentPoly normalized = r.unit ? r.factor.times(Monomial{} / r.unit->mono, r.unit->coeff) : r.factor;
  r.diff = apoly::coefficient_diff(reference, normalized);
  r.equal = r.diff.empty();
  return r;
}

CompareReport compare_with_apoly(const LaurentPoly& poly, int p) {
  CompareReport r = compare_factor(poly, apoly::a_polynomial(p).poly);
  r.p = p;
  return r;
}

}  // namespace qtwist::qrec
