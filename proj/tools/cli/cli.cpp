#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "qtwist/apoly/apoly.hpp"
#include "qtwist/errors.hpp"
#include "qtwist/exactalg/poly_io.hpp"
#include "qtwist/jones/jones.hpp"
#include "qtwist/qrec/qrec.hpp"
#include "qtwist/volnum/volnum.hpp"

namespace qtwist::cli {

namespace {

using exactalg::LaurentPoly;
using exactalg::Real;
using exactalg::Term;
using nlohmann::json;

struct Options {
  std::optional<int> p;
  std::optional<std::string> knot;
  int n = 0;
  std::string form = "masbaum";
  std::string sign = "alternating";
  bool habiro = false;
  std::string out_format;
  std::string out_file;
  int p_min = 0;
  int p_max = 0;
  int n_min = 0;
  int n_max = 0;
  std::string fixture;
  std::string mode = "interior";
  int compare_p = 0;
  int prec = 128;
  bool all_solutions = false;
};

std::string term_string(const Term& t) { return LaurentPoly::monomial(t.mono, t.coeff).to_string(); }

json unit_json(const std::optional<Term>& unit) {
  if (!unit) return nullptr;
  return term_string(*unit);
}

json diff_json(const std::vector<apoly::CoefficientDiff>& diff) {
  json out = json::array();
  for (const auto& d : diff) {
    out.push_back({{"monomial", d.mono.to_string()}, {"expected", d.expected.get_str()}, {"actual", d.actual.get_str()}});
  }
  return out;
}

void write_diff(std::ostream& out, const std::vector<apoly::CoefficientDiff>& diff) {
  for (const auto& d : diff) {
    out << "  " << d.mono.to_string() << ": expected " << d.expected.get_str() << ", got " << d.actual.get_str() << "\n";
  }
}

int decimal_digits(int prec) { return static_cast<int>(std::floor(prec * 0.30103)) - 2; }

void emit_poly(std::ostream& out, const Options& o, const LaurentPoly& poly, json meta) {
  if (o.out_format == "json") {
    meta["poly"] = exactalg::to_json(poly);
    out << meta.dump() << "\n";
  } else {
    out << poly.to_string() << "\n";
  }
}

int cmd_jones(const Options& o, std::ostream& out) {
  const jones::KnotId knot = o.p ? jones::KnotId(jones::TwistKnot{*o.p}) : jones::parse_knot(*o.knot);
  const auto sign = jones::parse_convention(o.sign);
  auto compute = [&](int n) {
    if (o.form == "multisum") return jones::colored_jones_multisum(knot, n);
    const auto* twist = std::get_if<jones::TwistKnot>(&knot);
    if (twist == nullptr) throw DomainError("--form masbaum needs a twist knot (--p)");
    return jones::colored_jones(twist->p, n, sign);
  };
  if (o.n < 1) throw DomainError("colored Jones needs n >= 1");
  LaurentPoly poly = compute(o.n);
  if (o.habiro) poly = jones::habiro_normalize(poly, compute(1));
  json meta = {{"knot", jones::knot_name(knot)}, {"n", o.n}, {"form", o.form}, {"habiro_normalize", o.habiro}};
  if (o.form == "masbaum") meta["sign"] = o.sign;
  emit_poly(out, o, poly, std::move(meta));
  return kOk;
}

int cmd_apoly(const Options& o, std::ostream& out, const std::string& which) {
  LaurentPoly poly;
  if (which == "apoly") {
    poly = apoly::a_polynomial(*o.p).poly;
  } else if (which == "bpoly") {
    poly = apoly::b_polynomial(*o.p).poly;
  } else {
    poly = apoly::h_polynomial(*o.p).poly;
  }
  emit_poly(out, o, poly, {{"p", *o.p}, {"kind", which}});
  return kOk;
}

int cmd_verify_aj(const Options& o, std::ostream& out) {
  if (o.p_min > o.p_max) throw DomainError("--p-min must not exceed --p-max");
  bool all = true;
  json reports = json::array();
  for (int p = o.p_min; p <= o.p_max; ++p) {
    const apoly::AjReport r = apoly::verify_aj(p);
    all = all && r.equal;
    if (o.out_format == "json") {
      reports.push_back({{"p", r.p}, {"equal", r.equal}, {"unit", unit_json(r.unit)}, {"diff", diff_json(r.diff)}});
      continue;
    }
    out << "p=" << r.p << " " << (r.equal ? "equal" : "not equal");
    if (!r.equal && r.unit) out << " up to unit " << term_string(*r.unit);
    out << "\n";
    write_diff(out, r.diff);
  }
  if (o.out_format == "json") out << reports.dump() << "\n";
  return all ? kOk : kVerificationFailed;
}

int cmd_rec_check(const Options& o, std::ostream& out) {
  const qrec::RecurrenceSpec spec = qrec::load_recurrence(o.fixture);
  if (spec.kind != qrec::Kind::KFree) throw DomainError("rec-check needs a kfree recurrence; use rec-q1 for " + spec.name);
  if (o.n_min > o.n_max) throw DomainError("--n-min must not exceed --n-max");
  const qrec::KFreeReport r = qrec::check_kfree(spec, o.n_min, o.n_max, qrec::parse_grid_mode(o.mode));
  if (o.out_format == "json") {
    json nonzero = json::array();
    for (const auto& z : r.nonzero) {
      nonzero.push_back({{"n", z.n}, {"k", z.k}, {"l", z.l}, {"value", exactalg::to_json(z.value)}});
    }
    out << json{{"recurrence", spec.name},
                {"terms", spec.terms.size()},
                {"n_min", r.n_min},
                {"n_max", r.n_max},
                {"mode", qrec::grid_mode_name(r.mode)},
                {"points", r.points},
                {"nonzero", nonzero},
                {"note", r.note},
                {"ok", r.ok()}}
               .dump()
        << "\n";
  } else {
    out << spec.name << ": " << spec.terms.size() << " terms, mode " << qrec::grid_mode_name(r.mode) << ", n in ["
        << r.n_min << ", " << r.n_max << "], " << r.points << " points, " << r.nonzero.size() << " nonzero\n";
    for (const auto& z : r.nonzero) {
      out << "  (" << z.n << ", " << z.k << ", " << z.l << "): " << z.value.to_string() << "\n";
    }
    if (!r.note.empty()) out << "note: " << r.note << "\n";
    out << (r.ok() ? "ok" : "FAILED") << "\n";
  }
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_rec_q1(const Options& o, std::ostream& out) {
  const qrec::RecurrenceSpec spec = qrec::load_recurrence(o.fixture);
  const qrec::Q1Result q1 = qrec::specialize_q1(spec);
  const bool json_out = o.out_format == "json";
  if (!q1.exact) {
    if (json_out) {
      out << json{{"recurrence", spec.name},
                  {"exact", false},
                  {"denominator", exactalg::to_json(q1.denominator)},
                  {"remainder", exactalg::to_json(q1.remainder)}}
                 .dump()
          << "\n";
    } else {
      out << spec.name << ": q = 1 specialization is not a polynomial\n";
      out << "denominator: " << q1.denominator.to_string() << "\n";
      out << "remainder: " << q1.remainder.to_string() << "\n";
    }
    return kVerificationFailed;
  }
  const qrec::CompareReport c = qrec::compare_with_apoly(q1.poly, o.compare_p);
  if (json_out) {
    out << json{{"recurrence", spec.name},
                {"exact", true},
                {"poly", exactalg::to_json(q1.poly)},
                {"p", c.p},
                {"abelian_power", c.abelian_power},
                {"factor", exactalg::to_json(c.factor)},
                {"unit", unit_json(c.unit)},
                {"equal", c.equal},
                {"diff", diff_json(c.diff)}}
               .dump()
        << "\n";
  } else {
    out << spec.name << ": (1 + m^2*l)^" << c.abelian_power << " * (" << c.factor.to_string() << ")\n";
    out << "compared with A_{K_" << c.p << "}: " << (c.equal ? "equal" : "not equal");
    if (c.unit) out << " up to unit " << term_string(*c.unit);
    out << "\n";
    write_diff(out, c.diff);
  }
  return c.equal ? kOk : kVerificationFailed;
}

int cmd_volume(const Options& o, std::ostream& out) {
  const auto prec = static_cast<mpfr_prec_t>(o.prec);
  const volnum::VolumeResult v = volnum::optimistic_volume(*o.p, prec);
  const int digits = decimal_digits(o.prec);
  const auto& rep = v.report;
  if (o.out_format == "json") {
    json j = {{"p", rep.p},
              {"prec", o.prec},
              {"volume", v.volume.to_string(digits)},
              {"eliminant_degree", rep.eliminant_degree},
              {"discarded", rep.discarded},
              {"selected", v.index}};
    if (o.all_solutions) {
      json sols = json::array();
      for (const auto& s : rep.solutions) {
        sols.push_back({{"x0", s.x0.to_string(digits)},
                        {"y0", s.y0.to_string(digits)},
                        {"volume_candidate", s.volume_candidate.to_string(digits)},
                        {"residual1", s.residual1.to_string(6)},
                        {"residual2", s.residual2.to_string(6)}});
      }
      j["solutions"] = sols;
    }
    out << j.dump() << "\n";
    return kOk;
  }
  out << v.volume.to_string(digits) << "\n";
  if (o.all_solutions) {
    out << "eliminant degree " << rep.eliminant_degree << ", " << rep.discarded << " degenerate roots discarded\n";
    for (std::size_t i = 0; i < rep.solutions.size(); ++i) {
      const auto& s = rep.solutions[i];
      out << (i == v.index ? "* " : "  ") << "x0 = " << s.x0.to_string(digits) << ", y0 = " << s.y0.to_string(digits)
          << ", volume = " << s.volume_candidate.to_string(digits) << ", residuals " << s.residual1.to_string(3) << " "
          << s.residual2.to_string(3) << "\n";
    }
  }
  return kOk;
}

int cmd_kashaev(const Options& o, std::ostream& out) {
  const auto scan = volnum::kashaev_scan(*o.p, o.n_min, o.n_max, static_cast<mpfr_prec_t>(o.prec));
  if (o.out_format == "json") {
    json rows = json::array();
    for (const auto& e : scan) rows.push_back({{"n", e.n}, {"v_n", e.v ? json(e.v->to_string(20)) : json(nullptr)}});
    out << json{{"p", *o.p}, {"prec", o.prec}, {"values", rows}}.dump() << "\n";
  } else {
    out << "n,v_n\n";
    for (const auto& e : scan) out << e.n << "," << (e.v ? e.v->to_string(20) : "") << "\n";
  }
  return kOk;
}

struct Parsed {
  std::string name;
  Options opts;
};

void add_out(CLI::App* sub, Options& o, std::vector<std::string> formats) {
  o.out_format = formats.front();
  sub->add_option("--out", o.out_format, "Output format")->check(CLI::IsMember(formats));
  sub->add_option("--out-file", o.out_file, "Write the result to this file instead of standard output");
}

void add_prec(CLI::App* sub, Options& o) {
  sub->add_option("--prec", o.prec, "Precision in bits")->check(CLI::Range(64, 1 << 20));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored Jones polynomials, A-polynomials and volumes of twist knots", "qtwist"};
  app.require_subcommand(1);
  Options o;

  auto* jones_cmd = app.add_subcommand("jones", "Colored Jones polynomial J(n)");
  auto* jp = jones_cmd->add_option("--p", o.p, "Twist parameter");
  auto* jk = jones_cmd->add_option("--knot", o.knot, "Named knot: 5_2 or 6_1");
  jp->excludes(jk);
  jones_cmd->add_option("--n", o.n, "Color")->required();
  jones_cmd->add_option("--form", o.form, "Formula")->check(CLI::IsMember({"masbaum", "multisum"}));
  jones_cmd->add_option("--sign", o.sign, "Sign convention of the coefficient formula")
      ->check(CLI::IsMember({"alternating", "k0-flipped", "unsigned"}));
  jones_cmd->add_flag("--habiro-normalize", o.habiro, "Divide by the J(1) of the same formula");
  add_out(jones_cmd, o, {"text", "json"});

  for (const char* name : {"apoly", "bpoly", "hpoly"}) {
    auto* sub = app.add_subcommand(name, std::string(name == std::string("apoly")   ? "A-polynomial by recursion"
                                                     : name == std::string("bpoly") ? "Polynomial from the recurrence construction"
                                                                                    : "The polynomial h_p(x, m)"));
    sub->add_option("--p", o.p, "Twist parameter")->required();
    add_out(sub, o, {"text", "json"});
  }

  auto* aj = app.add_subcommand("verify-aj", "Check the recurrence construction against the A-polynomial");
  aj->add_option("--p-min", o.p_min)->required();
  aj->add_option("--p-max", o.p_max)->required();
  add_out(aj, o, {"text", "json"});

  auto* rc = app.add_subcommand("rec-check", "Residuals of a k-free recurrence on a grid");
  rc->add_option("--fixture", o.fixture, "Recurrence file")->required();
  rc->add_option("--n-min", o.n_min)->required();
  rc->add_option("--n-max", o.n_max)->required();
  rc->add_option("--mode", o.mode)->check(CLI::IsMember({"interior", "full"}));
  add_out(rc, o, {"text", "json"});

  auto* rq = app.add_subcommand("rec-q1", "Specialize a recurrence at q = 1 and compare with an A-polynomial");
  rq->add_option("--fixture", o.fixture, "Recurrence file")->required();
  rq->add_option("--compare-p", o.compare_p)->required();
  add_out(rq, o, {"text", "json"});

  auto* vol = app.add_subcommand("volume", "Optimistic volume from the saddle-point equations");
  vol->add_option("--p", o.p, "Twist parameter")->required();
  add_prec(vol, o);
  vol->add_flag("--all-solutions", o.all_solutions, "List every saddle solution");
  add_out(vol, o, {"text", "json"});

  auto* ks = app.add_subcommand("kashaev", "v_n = 2 pi log|J(n)| / n at q = exp(2 pi i / n)");
  ks->add_option("--p", o.p, "Twist parameter")->required();
  ks->add_option("--n-min", o.n_min)->required();
  ks->add_option("--n-max", o.n_max)->required();
  add_prec(ks, o);
  add_out(ks, o, {"csv", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    err << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (name == "jones" && !o.p && !o.knot) {
    err << "error: jones needs --p or --knot\n\n" << sub->help();
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (name == "jones") {
      code = cmd_jones(o, buffer);
    } else if (name == "apoly" || name == "bpoly" || name == "hpoly") {
      code = cmd_apoly(o, buffer, name);
    } else if (name == "verify-aj") {
      code = cmd_verify_aj(o, buffer);
    } else if (name == "rec-check") {
      code = cmd_rec_check(o, buffer);
    } else if (name == "rec-q1") {
      code = cmd_rec_q1(o, buffer);
    } else if (name == "volume") {
      code = cmd_volume(o, buffer);
    } else {
      code = cmd_kashaev(o, buffer);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const InexactDivision& e) {
    err << "inexact division: " << e.what() << "\n";
    return kVerificationFailed;
  }

  if (o.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_file);
    if (!file) {
      err << "error: cannot write " << o.out_file << "\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace qtwist::cli
