#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <utility>

#include "tetra/feynman.hpp"
#include "tetra/identities.hpp"
#include "tetra/polylog.hpp"
#include "tetra/pslq.hpp"

namespace tetra::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kResidualDigits = 6;

struct Result {
  std::string name;
  std::string status;
  std::string max_residual;
  int samples = 1;
};

struct Report {
  std::string tool;
  int digits = 0;
  std::uint64_t seed = 0;
  std::vector<Result> results;
  std::vector<std::pair<std::string, std::string>> values;

  void value(std::string name, const Real& v, int digits) { values.emplace_back(std::move(name), v.to_string(digits)); }
  void check(std::string name, const Real& residual, const Real& tol) {
    results.push_back({std::move(name), residual < tol ? "pass" : "fail", residual.to_string(kResidualDigits), 1});
  }
  bool ok() const {
    for (const Result& r : results) {
      if (r.status == "fail" || r.status == "conjecture-violated") return false;
    }
    return true;
  }
};

void emit(const Report& rep, bool as_json, std::ostream& out) {
  if (as_json) {
    json j;
    j["tool"] = rep.tool;
    j["digits"] = rep.digits;
    j["seed"] = rep.seed;
    j["results"] = json::array();
    for (const Result& r : rep.results) {
      j["results"].push_back(
          {{"name", r.name}, {"status", r.status}, {"max_residual", r.max_residual}, {"samples", r.samples}});
    }
    j["values"] = json::object();
    for (const auto& [k, v] : rep.values) j["values"][k] = v;
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : rep.values) out << k << " = " << v << "\n";
  if (rep.results.empty()) return;
  if (!rep.values.empty()) out << "\n";
  std::size_t width = 0;
  for (const Result& r : rep.results) width = std::max(width, r.name.size());
  int failed = 0;
  for (const Result& r : rep.results) {
    std::string status = r.status;
    for (char& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out << status << std::string(20 - std::min<std::size_t>(status.size(), 19), ' ') << r.name
        << std::string(width + 2 - r.name.size(), ' ') << "residual " << r.max_residual;
    if (r.samples != 1) out << "  samples " << r.samples;
    out << "\n";
    if (r.status == "fail" || r.status == "conjecture-violated") ++failed;
  }
  out << rep.results.size() - failed << "/" << rep.results.size() << " passed\n";
}

bool is_plain_decimal(std::string_view s) {
  std::size_t i = 0;
  bool digits = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, digits = true;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, digits = true;
  }
  if (!digits) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) return false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  }
  return i == s.size();
}

Real parse_term(std::string_view t, std::string_view whole, const PrecisionCtx& ctx) {
  auto fail = [&]() -> Real { throw ParseError("malformed number '" + std::string(whole) + "'"); };
  if (t.empty()) return fail();
  if (is_plain_decimal(t)) return Real::parse(t, ctx);
  Real k(ctx);
  std::string_view head;
  if (t.ends_with("pi")) {
    k = const_pi(ctx);
    head = t.substr(0, t.size() - 2);
  } else if (t.ends_with("e")) {
    k = exp(Real(1L, ctx));
    head = t.substr(0, t.size() - 1);
  } else {
    return fail();
  }
  if (head.ends_with("*")) {
    head.remove_suffix(1);
    if (head.empty()) return fail();
  }
  if (head.empty()) return k;
  if (!is_plain_decimal(head)) return fail();
  return Real::parse(head, ctx) * k;
}

std::string join_names(const std::vector<std::string>& names, const std::vector<std::int64_t>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const std::int64_t m = c[i] < 0 ? -c[i] : c[i];
    if (s.empty()) {
      if (c[i] < 0) s += "-";
    } else {
      s += c[i] < 0 ? " - " : " + ";
    }
    if (m != 1) s += std::to_string(m) + "*";
    s += names[i];
  }
  return s + " = 0";
}

// Pair relations read more naturally as "x = y" or "x = -y".
std::string pair_relation(const std::string& x, const std::string& y, const std::vector<std::int64_t>& c) {
  if (c[0] == 1 && c[1] == -1) return x + " = " + y;
  if (c[0] == 1 && c[1] == 1) return x + " = -" + y;
  return join_names({x, y}, c);
}

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string what;
  std::string theta, re, im = "0", name;
};

Report cmd_eval(const EvalArgs& a, const PrecisionCtx& ctx) {
  Report rep;
  const int d = ctx.digits();
  if (a.what == "cl2") {
    if (a.theta.empty()) throw ParseError("eval cl2 needs --theta");
    rep.value("cl2(" + a.theta + ")", cl2(parse_number(a.theta, ctx), ctx), d);
  } else if (a.what == "li2") {
    if (a.re.empty()) throw ParseError("eval li2 needs --re");
    const Complex z(parse_number(a.re, ctx), parse_number(a.im, ctx));
    const Complex v = li2(z, ctx);
    rep.value("li2.re", v.re(), d);
    rep.value("li2.im", v.im(), d);
  } else {
    if (a.name.empty()) throw ParseError("eval const needs --name");
    rep.value(a.name, constant(a.name, ctx), d);
  }
  return rep;
}

// ---- feynman --------------------------------------------------------------

struct FeynmanArgs {
  std::string a = "1", b = "1";
  std::string method = "all";
  std::string tol;
};

void add_named(Report& rep, const std::vector<NamedResidual>& rs, const std::string& group, const Real& tol,
               const PrecisionCtx& ctx) {
  Real m(ctx);
  for (const NamedResidual& r : rs) m = max(m, abs(r.residual));
  rep.check(group, m, tol);
}

Report cmd_feynman(const FeynmanArgs& fa, const PrecisionCtx& ctx) {
  Report rep;
  const int d = ctx.digits();
  const MassPair m = make_mass_pair(parse_number(fa.a, ctx), parse_number(fa.b, ctx), ctx);
  const Real tol = fa.tol.empty() ? pow10(-(d - 15), ctx) : parse_number(fa.tol, ctx);
  if (!(tol > 0L)) throw DomainError("--tol must be positive");
  const Real agree = pow10(-(d - 10), ctx);
  const bool all = fa.method == "all";

  std::optional<Real> closed, direct, step;
  Real direct_err(ctx);

  if (all || fa.method == "closed") {
    closed = c_closed(m, ctx);
    rep.value("C.closed", *closed, d);
  }
  if (all || fa.method == "direct") {
    const QuadratureResult q = c_direct(m, tol, ctx);
    direct = q.value;
    direct_err = q.error_estimate;
    rep.value("C.direct", q.value, d);
    rep.value("C.direct.error_estimate", q.error_estimate, kResidualDigits);
  }
  if (all || fa.method == "stepwise") {
    const StepReport s = stepwise(m, ctx);
    step = s.c_bracket;
    rep.value("C.stepwise", s.c_bracket, d);
    rep.value("C.stepwise.quadrature", s.c_quadrature, d);
    for (const IntegralCheck& ic : s.integrals) {
      rep.value(ic.name + ".bracket", ic.bracket, d);
      rep.value(ic.name + ".quadrature", ic.quadrature.value, d);
      rep.check(ic.name + " bracket = quadrature", ic.difference, s.tolerance);
    }
    rep.value("I1+I2.bracket", s.i1_plus_i2_bracket, kResidualDigits);
    rep.value("I1+I2.quadrature", s.i1_plus_i2_quadrature, kResidualDigits);
    rep.check("I1+I2 = 0 (brackets)", abs(s.i1_plus_i2_bracket), agree);
    rep.check("I1+I2 = 0 (quadrature)", abs(s.i1_plus_i2_quadrature), s.tolerance);
    rep.check("I4 log remainder = 0", abs(s.i4_log_remainder), agree);
    rep.check("2d(I3+I4) = s-form", abs(s.s_form_residual), agree);
    add_named(rep, definition_residuals(s.angles, ctx), "angle definitions", agree, ctx);
    add_named(rep, angle_identity_residuals(s.angles, ctx), "angle identities", agree, ctx);
    add_named(rep, q_relation_residuals(s.q, ctx), "q relations", agree, ctx);
    add_named(rep, r_relation_residuals(s.r, ctx), "r relations", agree, ctx);
    add_named(rep, rs_relation_residuals(s.r, s.s, ctx), "r-s relations", agree, ctx);
    for (const auto* vec : {&s.q, &s.r, &s.s}) {
      for (const ClausenValue& v : *vec) {
        rep.value(v.name, v.value, d);
        rep.value(v.name + ".angle", v.angle, d);
      }
    }
  }
  if (closed && direct) rep.check("closed = direct", abs(*closed - *direct), max(agree, 10L * tol + direct_err));
  if (closed && step) rep.check("closed = stepwise", abs(*closed - *step), agree);
  if (direct && step) rep.check("direct = stepwise", abs(*direct - *step), max(agree, 10L * tol + direct_err));
  return rep;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int samples = 20;
  bool list = false;
};

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Report cmd_verify(const VerifyArgs& va, std::uint64_t seed, const PrecisionCtx& ctx) {
  Report rep;
  std::vector<std::string> names;
  if (va.suite == "all") {
    for (const IdentitySpec& s : catalog()) names.push_back(s.name);
  } else {
    names = split_names(va.suite);
    if (names.empty()) throw ParseError("--suite names no identities");
    for (const std::string& n : names) find_identity(n);
  }
  for (const std::string& n : names) {
    const IdentityReport r = verify(n, va.samples, seed, ctx);
    std::string status;
    if (r.status == IdentityStatus::proven) {
      status = r.pass ? "pass" : "fail";
    } else {
      status = r.pass ? "conjecture-ok" : "conjecture-violated";
    }
    rep.results.push_back({r.name, status, r.max_residual.to_string(kResidualDigits), r.samples});
  }
  return rep;
}

void list_catalog(std::ostream& out) {
  for (const IdentitySpec& s : catalog()) {
    out << s.name << (s.status == IdentityStatus::conjectural ? "  [conjectural]" : "") << "\n    " << s.statement
        << "\n";
  }
}

// ---- pslq -----------------------------------------------------------------

struct PslqArgs {
  std::string builtin;
  std::string a = "1/pi", b = "1/e";
  std::string values_from;
  std::string max_norm = "1e6";
  std::string mode;
};

Report cmd_pslq(const PslqArgs& pa, const PrecisionCtx& ctx) {
  Report rep;
  const int d = ctx.digits();
  std::vector<std::string> names;
  std::vector<Real> xs;
  if (!pa.values_from.empty()) {
    std::ifstream in(pa.values_from);
    if (!in) throw DomainError("cannot read '" + pa.values_from + "'");
    xs = read_values(in, ctx);
    for (std::size_t i = 0; i < xs.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  } else if (pa.builtin == "conj14") {
    for (const ClausenValue& v : conj14_values(ctx)) {
      names.push_back(v.name);
      xs.push_back(v.value);
    }
  } else {
    const MassPair m = make_mass_pair(parse_number(pa.a, ctx), parse_number(pa.b, ctx), ctx);
    const DerivedAngles g = derive(m, ctx);
    for (const ClausenValue& v : pa.builtin == "r19" ? r_values(g, ctx) : q_values(g, ctx)) {
      names.push_back(v.name);
      xs.push_back(v.value);
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) rep.value(names[i], xs[i], d);

  const Real max_norm = parse_number(pa.max_norm, ctx);
  const bool pairs =
      pa.mode.empty() ? (pa.values_from.empty() && pa.builtin != "conj14") : pa.mode == "pairs";
  const Real threshold = detection_threshold(ctx);

  auto record = [&](const std::string& name, const RelationResult& r) {
    rep.results.push_back({name, "pass", r.residual.to_string(kResidualDigits), 1});
  };

  if (!pairs) {
    const RelationResult r = find_relation(xs, max_norm, ctx);
    if (r.status == RelationResult::Status::found) {
      record(join_names(names, r.coeffs), r);
      for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        rep.values.emplace_back("coeff." + names[i], std::to_string(r.coeffs[i]));
      }
    } else {
      rep.value("exclusion_bound", r.exclusion_bound, kResidualDigits);
    }
    rep.values.emplace_back("iterations", std::to_string(r.iterations));
    return rep;
  }

  std::vector<bool> zero(xs.size(), false);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (abs(xs[i]) < threshold) {
      zero[i] = true;
      rep.results.push_back({names[i] + " = 0", "pass", abs(xs[i]).to_string(kResidualDigits), 1});
    }
  }
  int scanned = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (zero[i] || zero[j]) continue;
      ++scanned;
      const RelationResult r = find_relation({xs[i], xs[j]}, max_norm, ctx);
      if (r.status == RelationResult::Status::found) record(pair_relation(names[i], names[j], r.coeffs), r);
    }
  }
  rep.values.emplace_back("pairs_scanned", std::to_string(scanned));
  rep.value("max_norm", max_norm, kResidualDigits);
  return rep;
}

}  // namespace

Real parse_number(std::string_view text, const PrecisionCtx& ctx) {
  std::string_view t = text;
  bool negative = false;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    negative = t.front() == '-';
    t.remove_prefix(1);
  }
  const std::size_t slash = t.find('/');
  Real v(ctx);
  if (slash == std::string_view::npos) {
    v = parse_term(t, text, ctx);
  } else {
    if (t.find('/', slash + 1) != std::string_view::npos) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    const Real den = parse_term(t.substr(slash + 1), text, ctx);
    if (den.is_zero()) throw DomainError("division by zero in '" + std::string(text) + "'");
    v = parse_term(t.substr(0, slash), text, ctx) / den;
  }
  return negative ? -v : v;
}

std::vector<Real> read_values(std::istream& in, const PrecisionCtx& ctx) {
  std::vector<Real> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(b, e - b + 1);
    try {
      out.push_back(Real::parse(tok, ctx));
    } catch (const ParseError&) {
      throw ParseError("line " + std::to_string(lineno) + ": malformed decimal '" + tok + "'");
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision Clausen / dilogarithm evaluation, tetrahedral integral C(a, b), identity checks and PSLQ",
               "tetra"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  int digits = 50;
  std::uint64_t seed = 42;
  bool as_json = false;
  CLI::Option* digits_opt =
      app.add_option("--digits", digits, "decimal digits of precision")->check(CLI::Range(15, 100000));
  app.add_option("--seed", seed, "seed for sampled identity checks");
  app.add_flag("--json", as_json, "emit a JSON report");

  EvalArgs ea;
  CLI::App* eval = app.add_subcommand("eval", "evaluate Cl2, Li2 or a constant");
  eval->add_option("what", ea.what, "cl2 | li2 | const")->required()->check(CLI::IsMember({"cl2", "li2", "const"}));
  eval->add_option("--theta", ea.theta, "angle for cl2");
  eval->add_option("--re", ea.re, "real part for li2");
  eval->add_option("--im", ea.im, "imaginary part for li2");
  eval->add_option("--name", ea.name, "pi | log2 | catalan");

  FeynmanArgs fa;
  CLI::App* feyn = app.add_subcommand("feynman", "evaluate C(a, b) and trace the reduction");
  feyn->add_option("--a", fa.a, "first mass");
  feyn->add_option("--b", fa.b, "second mass");
  feyn->add_option("--method", fa.method, "closed | direct | stepwise | all")
      ->check(CLI::IsMember({"closed", "direct", "stepwise", "all"}));
  feyn->add_option("--tol", fa.tol, "absolute quadrature tolerance on C");

  VerifyArgs va;
  CLI::App* ver = app.add_subcommand("verify", "check catalog identities at sampled points");
  ver->add_option("--suite", va.suite, "all, or comma-separated identity names");
  ver->add_option("--samples", va.samples, "sample points per identity")->check(CLI::PositiveNumber);
  ver->add_flag("--list", va.list, "list the catalog and exit");

  PslqArgs pa;
  CLI::App* pslq = app.add_subcommand("pslq", "search for integer relations");
  CLI::Option* builtin_opt = pslq->add_option("--builtin", pa.builtin, "r19 | conj14 | qs")
                                 ->check(CLI::IsMember({"r19", "conj14", "qs"}));
  pslq->add_option("--a", pa.a, "first mass for r19 / qs");
  pslq->add_option("--b", pa.b, "second mass for r19 / qs");
  pslq->add_option("--values-from", pa.values_from, "file with one decimal per line")->excludes(builtin_opt);
  pslq->add_option("--max-norm", pa.max_norm, "give up once no relation below this norm can exist");
  pslq->add_option("--mode", pa.mode, "pairs | full (pairs is the default for r19 and qs)")
      ->check(CLI::IsMember({"pairs", "full"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "tetra: error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (pslq->parsed() && digits_opt->count() == 0 && pa.values_from.empty()) digits = 200;
    const PrecisionCtx ctx(digits);
    Report rep;
    if (eval->parsed()) {
      rep = cmd_eval(ea, ctx);
    } else if (feyn->parsed()) {
      rep = cmd_feynman(fa, ctx);
    } else if (ver->parsed()) {
      if (va.list) {
        list_catalog(out);
        return 0;
      }
      rep = cmd_verify(va, seed, ctx);
    } else {
      if (pa.builtin.empty() && pa.values_from.empty()) throw ParseError("pslq needs --builtin or --values-from");
      rep = cmd_pslq(pa, ctx);
    }
    rep.tool = "tetra " + app.get_subcommands().front()->get_name();
    rep.digits = digits;
    rep.seed = seed;
    emit(rep, as_json, out);
    return rep.ok() ? 0 : 1;
  } catch (const PslqPrecisionError& e) {
    err << "tetra: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "tetra: error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "tetra: error: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionError& e) {
    err << "tetra: error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "tetra: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tetra::cli
