#include "lrs/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrs/applications.hpp"
#include "lrs/closed_form.hpp"
#include "lrs/error.hpp"
#include "lrs/genfunc.hpp"
#include "lrs/identities.hpp"
#include "lrs/irs_algebra.hpp"
#include "lrs/json_io.hpp"
#include "lrs/sequence.hpp"

namespace lrs::cli {

namespace {

struct Options {
  std::string coeffs;
  std::string initials;
  std::string spec_file;
  std::optional<long> count;
  std::optional<long> from;
  std::optional<long> to;
  std::string n;  // an index, or a range for verify
  std::optional<long> k;
  std::optional<long> rows;
  std::optional<long> cols;
  std::string variant = "fibonacci";
  std::string suite;
  std::string m_range;
  std::string r_range;
  std::string ms;
  std::string seq;
  bool triangle = false;
  long precision_bits = 256;
  int digits = 30;
  std::string format = "table";
};

// Options whose values may legitimately start with '-' ("-10..10", "-1,2").
bool takes_signed_value(const std::string& arg) {
  static const char* const names[] = {"--coeffs", "--initials", "--from", "--to", "--n",
                                      "--m",      "--r",        "--k",    "--seq"};
  return std::any_of(std::begin(names), std::end(names), [&](const char* n) { return arg == n; });
}

std::vector<std::string> glue_signed_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (takes_signed_value(args[i]) && i + 1 < args.size() && !args[i + 1].empty() && args[i + 1][0] == '-') {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

long parse_index(const std::string& text) {
  const IntRange r = IntRange::parse(text);
  if (r.lo != r.hi) throw Error(ErrorCode::parse_error, "expected a single index, got '" + text + "'");
  return r.lo;
}

SequenceSpec load_spec(const Options& o) {
  if (!o.spec_file.empty()) return load_spec_file(o.spec_file);
  if (o.coeffs.empty()) throw Error(ErrorCode::invalid_argument, "a sequence is required: --coeffs or --spec");
  CoefficientSet cs(parse_rational_list(o.coeffs));
  if (o.initials.empty()) return make_irs(cs);
  return SequenceSpec(cs, parse_rational_list(o.initials));
}

void print_terms(std::ostream& out, TableFormat f, long from, const std::vector<Rational>& terms) {
  if (f == TableFormat::json) {
    out << terms_to_json(from, terms) << '\n';
  } else {
    out << join(terms, f == TableFormat::csv ? "," : " ") << '\n';
  }
}

// [lo, hi] from --from/--to, --n or --count, defaulting to 0..count-1.
std::pair<long, long> index_window(const Options& o, long default_count) {
  if (!o.n.empty()) {
    const long n = parse_index(o.n);
    return {n, n};
  }
  const long lo = o.from.value_or(0);
  const long hi = o.to ? *o.to : lo + o.count.value_or(default_count) - 1;
  if (hi < lo) throw Error(ErrorCode::invalid_argument, "empty index window");
  return {lo, hi};
}

int cmd_terms(const Options& o, std::ostream& out, bool irs_only) {
  SequenceSpec spec = load_spec(o);
  if (irs_only) spec = make_irs(spec.coefficients());
  const auto [lo, hi] = index_window(o, 10);
  const BilateralSequence seq(spec);
  print_terms(out, parse_format(o.format), lo, seq.terms(lo, hi));
  return 0;
}

int cmd_genfunc(const Options& o, std::ostream& out) {
  const SequenceSpec spec = load_spec(o);
  const RationalGF gf = genfunc_of(spec);
  const TableFormat f = parse_format(o.format);
  if (f == TableFormat::json) {
    out << genfunc_to_json(gf) << '\n';
    return 0;
  }
  out << gf.to_string() << '\n';
  if (o.count) out << join(expand(gf, static_cast<std::size_t>(*o.count)), f == TableFormat::csv ? "," : " ") << '\n';
  return 0;
}

int cmd_closed_form(const Options& o, std::ostream& out) {
  const SequenceSpec spec = load_spec(o);
  const auto roots = characteristic_roots(spec.coefficients(), o.precision_bits);
  const auto [lo, hi] = index_window(o, 10);
  const BilateralSequence seq(spec);
  const TableFormat f = parse_format(o.format);
  const int d = o.digits;
  if (f == TableFormat::json) {
    auto doc = nlohmann::json::parse(roots_to_json(roots, d));
    auto values = nlohmann::json::array();
    for (long n = lo; n <= hi; ++n) {
      const ComplexHP v = general_closed_form(spec, roots, n);
      values.push_back({{"n", n},
                        {"re", v.re.to_string(d)},
                        {"im", v.im.to_string(d)},
                        {"exact", seq.term(n).to_string()},
                        {"relative_error", relative_error(v, seq.term(n)).to_string(3)}});
    }
    doc["values"] = values;
    out << doc.dump() << '\n';
    return 0;
  }
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"root", "re", "im", "multiplicity"});
  std::size_t i = 0;
  for (const auto& r : roots.roots())
    cells.push_back({std::to_string(++i), r.alpha.re.to_string(d), r.alpha.im.to_string(d),
                     std::to_string(r.multiplicity)});
  out << render_table(cells, f);
  cells.clear();
  cells.push_back({"n", "closed form (re)", "exact", "relative error"});
  for (long n = lo; n <= hi; ++n) {
    const ComplexHP v = general_closed_form(spec, roots, n);
    cells.push_back(
        {std::to_string(n), v.re.to_string(d), seq.term(n).to_string(), relative_error(v, seq.term(n)).to_string(3)});
  }
  out << render_table(cells, f);
  return 0;
}

std::string signed_coefficient(const Rational& c, bool first) {
  std::string s;
  const Rational a = abs(c);
  if (first) {
    if (c.sign() < 0) s += "-";
  } else {
    s += c.sign() < 0 ? " - " : " + ";
  }
  if (a == Rational(1)) return s;
  return s + (a.is_integer() ? a.to_string() : "(" + a.to_string() + ")");
}

std::string shifted(const char* name, long shift) {
  std::string s = std::string(name) + "[n";
  if (shift > 0) s += "+" + std::to_string(shift);
  if (shift < 0) s += std::to_string(shift);
  return s + "]";
}

int cmd_represent(const Options& o, std::ostream& out) {
  const SequenceSpec spec = load_spec(o);
  const auto weights = representation_weights(spec);
  const TableFormat f = parse_format(o.format);
  if (f == TableFormat::json) {
    auto terms = nlohmann::json::array();
    for (const auto& w : weights) terms.push_back({{"shift", w.shift}, {"weight", w.weight.to_string()}});
    out << nlohmann::json{{"terms", terms}}.dump() << '\n';
    return 0;
  }
  std::string line = "a_n =";
  if (weights.empty()) line += " 0";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    line += i == 0 ? " " : "";
    line += signed_coefficient(weights[i].weight, i == 0) + shifted("F~", weights[i].shift);
  }
  out << line << '\n';
  if (!o.n.empty()) {
    const long n = parse_index(o.n);
    out << "a[" << n << "] = " << represent_by_irs(spec, n) << '\n';
  }
  return 0;
}

int cmd_toeplitz(const Options& o, std::ostream& out) {
  const SequenceSpec spec = load_spec(o);
  const auto system = build_toeplitz(spec);
  const auto rep = solve_toeplitz(system);
  if (parse_format(o.format) == TableFormat::json) {
    out << representation_to_json(rep) << '\n';
  } else {
    out << rep.to_signed_string() << '\n';
  }
  return 0;
}

int report(const IdentityVerdict& v, const Options& o, std::ostream& out) {
  if (parse_format(o.format) == TableFormat::json) {
    out << verdict_to_json(v) << '\n';
  } else {
    out << v.summary() << '\n';
  }
  return v.passed ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.suite.empty()) throw Error(ErrorCode::invalid_argument, "--suite is required");
  if (o.suite.rfind("named:", 0) == 0) {
    const IntRange window = IntRange::parse(o.n.empty() ? "0..64" : o.n);
    return report(named_identity_suite(o.suite.substr(6), window), o, out);
  }
  if (o.suite == "congruence-product") {
    const SequenceSpec spec = load_spec(o);
    if (spec.order() != 2) throw Error(ErrorCode::precondition_failed, "congruences need order 2");
    std::vector<long> ms;
    for (const auto& q : parse_rational_list(o.ms.empty() ? "3,4,5" : o.ms)) {
      if (!q.is_integer()) throw Error(ErrorCode::non_integer, "--ms entries must be integers");
      ms.push_back(q.numerator().get_si());
    }
    return report(congruence_product(BilateralIRS2::irs(spec.p(1), spec.p(2)), ms), o, out);
  }
  const IdentityFamily family = parse_family(o.suite);
  const SequenceSpec spec = load_spec(o);
  const bool cong = family == IdentityFamily::congruence;
  const IntRange m = IntRange::parse(o.m_range.empty() ? (cong ? "2..6" : "1..5") : o.m_range);
  const IntRange n = IntRange::parse(o.n.empty() ? "0..6" : o.n);
  const IntRange r = IntRange::parse(o.r_range.empty() ? (cong ? "0..10" : "-10..10") : o.r_range);
  return report(sweep(family, spec, m, n, r), o, out);
}

int cmd_stirling(const Options& o, std::ostream& out) {
  const TableFormat f = parse_format(o.format);
  if (o.k) {
    print_terms(out, f, 0, stirling_column(*o.k, static_cast<std::size_t>(o.count.value_or(10))));
    return 0;
  }
  const long rows = o.rows.value_or(7);
  if (rows < 1) throw Error(ErrorCode::invalid_argument, "--rows must be >= 1");
  const auto tri = stirling_triangle(rows - 1);
  if (f == TableFormat::json) {
    out << render_table(to_cells(tri), f);
    return 0;
  }
  std::vector<std::vector<std::string>> cells;
  cells.emplace_back(1, "n\\k");
  for (long k = 0; k < rows; ++k) cells[0].push_back(std::to_string(k));
  for (std::size_t n = 0; n < tri.size(); ++n) {
    auto& row = cells.emplace_back(1, std::to_string(n));
    for (const auto& x : tri[n]) row.push_back(x.get_str());
  }
  out << render_table(cells, f, f == TableFormat::table ? 1 : 0);
  return 0;
}

int cmd_wythoff(const Options& o, std::ostream& out) {
  const WythoffVariant variant = parse_variant(o.variant);
  const TableFormat f = parse_format(o.format);
  const auto table = wythoff_array(variant, o.rows.value_or(8), o.cols.value_or(8));
  out << render_table(to_cells(table), f, f == TableFormat::table ? 2 : 0);
  return 0;
}

int cmd_boustrophedon(const Options& o, std::ostream& out) {
  std::vector<Rational> a;
  if (!o.seq.empty()) {
    a = parse_rational_list(o.seq);
  } else {
    const SequenceSpec spec = load_spec(o);
    a = BilateralSequence(spec).terms(0, o.count.value_or(10) - 1);
  }
  const auto result = boustrophedon(a);
  const TableFormat f = parse_format(o.format);
  if (o.triangle) {
    out << render_table(to_cells(result.triangle), f);
  } else {
    print_terms(out, f, 0, result.b);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact linear recurring sequences", "lrs"};
  app.require_subcommand(1, 1);
  Options o;

  auto spec_opts = [&](CLI::App* c) {
    c->add_option("--coeffs", o.coeffs, "recurrence coefficients p1,...,pr");
    c->add_option("--initials", o.initials, "initial values a0,...,a(r-1); default is the impulse response");
    c->add_option("--spec", o.spec_file, "JSON sequence file");
  };
  auto window_opts = [&](CLI::App* c) {
    c->add_option("--count", o.count, "number of terms");
    c->add_option("--from", o.from, "first index");
    c->add_option("--to", o.to, "last index");
    c->add_option("--n", o.n, "single index");
  };
  auto format_opt = [&](CLI::App* c) {
    c->add_option("--format", o.format, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));
  };

  auto* eval = app.add_subcommand("eval", "evaluate terms of a sequence");
  spec_opts(eval);
  window_opts(eval);
  format_opt(eval);

  auto* irs = app.add_subcommand("irs", "impulse response sequence of a coefficient set");
  spec_opts(irs);
  window_opts(irs);
  format_opt(irs);

  auto* genfunc = app.add_subcommand("genfunc", "ordinary generating function");
  spec_opts(genfunc);
  genfunc->add_option("--count", o.count, "also print this many series coefficients");
  format_opt(genfunc);

  auto* closed = app.add_subcommand("closed-form", "characteristic roots and closed-form values");
  spec_opts(closed);
  window_opts(closed);
  closed->add_option("--precision-bits", o.precision_bits, "MPFR precision")->check(CLI::Range(32L, 1L << 20));
  closed->add_option("--digits", o.digits, "significant digits printed")->check(CLI::Range(1, 100000));
  format_opt(closed);

  auto* represent = app.add_subcommand("represent", "sequence as a combination of impulse response shifts");
  spec_opts(represent);
  represent->add_option("--n", o.n, "also evaluate at this index");
  format_opt(represent);

  auto* toeplitz = app.add_subcommand("toeplitz", "impulse response in terms of the sequence");
  spec_opts(toeplitz);
  format_opt(toeplitz);

  auto* verify = app.add_subcommand("verify", "exact identity checks");
  spec_opts(verify);
  verify->add_option("--suite", o.suite,
                     "addition|nonlinear|negative|small-m|transfer|congruence|congruence-product|named:<name>");
  verify->add_option("--m", o.m_range, "m range lo..hi");
  verify->add_option("--n", o.n, "n range lo..hi");
  verify->add_option("--r", o.r_range, "r range lo..hi");
  verify->add_option("--ms", o.ms, "index list for congruence-product");
  format_opt(verify);

  auto* stirling = app.add_subcommand("stirling", "Stirling numbers of the second kind");
  stirling->add_option("--k", o.k, "print column S(n+1,k) instead of the triangle");
  stirling->add_option("--count", o.count, "column length");
  stirling->add_option("--rows", o.rows, "triangle rows");
  format_opt(stirling);

  auto* wythoff = app.add_subcommand("wythoff", "Wythoff and Pell-Wythoff arrays");
  wythoff->add_option("--variant", o.variant, "fibonacci|pell");
  wythoff->add_option("--rows", o.rows, "rows");
  wythoff->add_option("--cols", o.cols, "columns including the two initial columns");
  format_opt(wythoff);

  auto* boust = app.add_subcommand("boustrophedon", "boustrophedon transform");
  boust->add_option("--seq", o.seq, "input sequence a0,a1,...");
  spec_opts(boust);
  boust->add_option("--count", o.count, "terms taken from the spec");
  boust->add_flag("--triangle", o.triangle, "print the whole triangle");
  format_opt(boust);

  std::vector<std::string> argv = glue_signed_values(args);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_terms(o, out, false);
    if (irs->parsed()) return cmd_terms(o, out, true);
    if (genfunc->parsed()) return cmd_genfunc(o, out);
    if (closed->parsed()) return cmd_closed_form(o, out);
    if (represent->parsed()) return cmd_represent(o, out);
    if (toeplitz->parsed()) return cmd_toeplitz(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (stirling->parsed()) return cmd_stirling(o, out);
    if (wythoff->parsed()) return cmd_wythoff(o, out);
    if (boust->parsed()) return cmd_boustrophedon(o, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  }
  err << "error: usage: no subcommand\n";
  return 2;
}

}  // namespace lrs::cli
