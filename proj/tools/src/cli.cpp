#include "cli.hpp"

#include "mocklab/errors.hpp"
#include "mocklab/identities.hpp"
#include "mocklab/matrix.hpp"
#include "mocklab/modpoint.hpp"
#include "mocklab/mordell.hpp"
#include "mocklab/qseries.hpp"
#include "mocklab/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace mocklab::cli {

namespace {

using nlohmann::ordered_json;

struct Common {
  unsigned prec = 256;
  std::string eps;
  std::string format = "text";
  std::string out;

  [[nodiscard]] PrecisionContext context() const {
    return eps.empty() ? PrecisionContext::with_default_eps(prec) : PrecisionContext(prec, eps);
  }
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format) {
  c.format = default_format;
  cmd->add_option("--prec", c.prec, "Working precision in bits")
      ->envname("MOCKLAB_PREC")
      ->capture_default_str();
  cmd->add_option("--eps", c.eps, "Target absolute tolerance (default 1e-floor(5*prec/32))");
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Output file (default stdout)");
}

/// Writes to --out when given, otherwise to the provided stream.
void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) {
    throw DomainError("cannot open output file '" + c.out + "'");
  }
  f << text;
}

std::string csv_real(const Real& x, unsigned digits) { return render_real(x, digits); }

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  Common common;
  std::string fn;
  std::string tau;
  std::string alpha;
  std::string q;
  std::string u;
  std::string r = "1/5";
};

struct Output {
  std::string name;
  Complex value;
  std::optional<Real> err;
};

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(s));
    }
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw DomainError("cannot parse rational '" + s + "'");
  }
}

Complex need_alpha(const EvalArgs& a) {
  if (!a.alpha.empty()) {
    return parse_complex(a.alpha);
  }
  if (!a.tau.empty()) {
    return GridPoint{parse_complex(a.tau), true}.alpha();
  }
  throw DomainError("--fn " + a.fn + " needs --alpha or --tau");
}

Complex need_tau(const EvalArgs& a) {
  if (!a.tau.empty()) {
    return parse_complex(a.tau);
  }
  if (!a.alpha.empty()) {
    return GridPoint{parse_complex(a.alpha), false}.tau();
  }
  throw DomainError("--fn " + a.fn + " needs --tau or --alpha");
}

Complex need_q(const EvalArgs& a, const PrecisionContext& ctx) {
  if (!a.q.empty()) {
    return parse_complex(a.q);
  }
  if (!a.alpha.empty() || !a.tau.empty()) {
    return from_alpha(need_alpha(a), ctx).q();
  }
  throw DomainError("--fn " + a.fn + " needs --q, --alpha or --tau");
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const PrecisionContext ctx = a.common.context();
  PrecisionScope scope(ctx);
  std::vector<Output> rows;
  std::vector<std::pair<std::string, Real>> extra;

  static const std::map<std::string, int> kTheta = {{"theta2", 2}, {"theta3", 3}, {"theta4", 4}};
  if (a.fn == "chi0" || a.fn == "chi1" || a.fn == "omega" || a.fn == "f" || a.fn == "rho" ||
      a.fn == "xi") {
    const SeriesValue s = eval_mock_detailed(MockThetaId::parse(a.fn), need_q(a, ctx), ctx);
    rows.push_back({a.fn, s.value, s.tail_bound});
  } else if (a.fn == "x0" || a.fn == "x1") {
    if (a.u.empty()) {
      throw DomainError("--fn " + a.fn + " needs --u");
    }
    const SeriesValue s =
        unary_x_detailed(a.fn == "x0" ? Unary::X0 : Unary::X1, parse_complex(a.u), ctx);
    rows.push_back({a.fn, s.value, s.tail_bound});
  } else if (a.fn == "eta") {
    rows.push_back({a.fn, eta(need_tau(a), ctx), std::nullopt});
  } else if (kTheta.count(a.fn)) {
    rows.push_back({a.fn, theta(kTheta.at(a.fn), need_tau(a), ctx), std::nullopt});
  } else if (a.fn == "L") {
    const Rational r = parse_rational(a.r);
    const QuadratureResult q = l_integral_detailed(r, need_alpha(a), ctx);
    rows.push_back({"L(" + r.str() + ")", q.value, q.err_estimate});
  } else if (a.fn == "W2" || a.fn == "W3") {
    const QuadratureResult q = a.fn == "W2" ? w2_integral_detailed(need_alpha(a), ctx)
                                            : w3_integral_detailed(need_alpha(a), ctx);
    rows.push_back({a.fn, q.value, q.err_estimate});
  } else if (a.fn == "lvec") {
    const LVector v = l_vector(need_alpha(a), ctx);
    rows.push_back({"lvec_1", v.l1, v.err_estimate});
    rows.push_back({"lvec_2", v.l2, v.err_estimate});
    const Vec2 l = v.vec();
    extra.emplace_back("fixed_point_residual", norm2(l - mixing_matrix(ctx) * l));
  } else {
    throw DomainError("unknown function '" + a.fn + "'");
  }

  const unsigned digits = ctx.output_digits();
  std::ostringstream os;
  if (a.common.format == "json") {
    ordered_json doc;
    doc["fn"] = a.fn;
    doc["prec_bits"] = ctx.prec_bits();
    ordered_json values = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j;
      j["name"] = r.name;
      j["re"] = render_real(r.value.re, digits);
      j["im"] = render_real(r.value.im, digits);
      if (r.err) {
        j["err"] = render_real(*r.err, 6);
      }
      values.push_back(j);
    }
    doc["values"] = values;
    for (const auto& [k, v] : extra) {
      doc[k] = render_real(v, 6);
    }
    os << doc.dump(2) << "\n";
  } else if (a.common.format == "csv") {
    os << "name,re,im,err\n";
    for (const auto& r : rows) {
      os << r.name << "," << csv_real(r.value.re, digits) << "," << csv_real(r.value.im, digits) << ","
         << (r.err ? render_real(*r.err, 6) : "") << "\n";
    }
    for (const auto& [k, v] : extra) {
      os << k << "," << render_real(v, 6) << ",,\n";
    }
  } else {
    for (const auto& r : rows) {
      os << r.name << " = " << render_real(r.value.re, digits);
      if (r.value.im != 0) {
        os << (r.value.im < 0 ? " - " : " + ") << render_real(abs(r.value.im), digits) << "i";
      }
      if (r.err) {
        os << "  (err <= " << render_real(*r.err, 3) << ")";
      }
      os << "\n";
    }
    for (const auto& [k, v] : extra) {
      os << k << " = " << render_real(v, 6) << "\n";
    }
  }
  emit(a.common, out, os.str());
  return Exit::ok;
}

// ---------------------------------------------------------------------------
// coeffs

struct CoeffsArgs {
  Common common;
  std::string fn;
  std::size_t n = 20;
};

int cmd_coeffs(const CoeffsArgs& a, std::ostream& out) {
  std::vector<BigRational> c;
  if (a.fn == "partition") {
    for (const auto& p : euler_inverse_coeffs(a.n)) {
      c.emplace_back(p);
    }
  } else if (a.fn == "x0" || a.fn == "x1") {
    c.assign(a.n + 1, BigRational(0));
    for (const auto& [e, sign] : unary_terms(a.fn == "x0" ? Unary::X0 : Unary::X1,
                                             static_cast<long long>(a.n))) {
      c[static_cast<std::size_t>(e)] += sign;
    }
  } else if (a.fn == "k0" || a.fn == "k1") {
    c = k_expand(a.fn == "k0" ? 0 : 1, a.n).coeffs;
  } else {
    c = series_expand(MockThetaId::parse(a.fn), a.n).coeffs;
  }
  std::ostringstream os;
  if (a.common.format == "json") {
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 0; k < c.size(); ++k) {
      rows.push_back({k, numerator(c[k]).str(), denominator(c[k]).str()});
    }
    os << ordered_json{{"fn", a.fn}, {"n", a.n}, {"coeffs", rows}}.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < c.size(); ++k) {
      os << k << "," << numerator(c[k]).str() << "," << denominator(c[k]).str() << "\n";
    }
  }
  emit(a.common, out, os.str());
  return Exit::ok;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  Common common;
  std::string suite = "all";
  std::string grid;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw DomainError("cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Suite suite = parse_suite(a.suite);
  const PrecisionContext ctx = a.common.context();
  PrecisionScope scope(ctx);
  std::vector<GridPoint> grid;
  if (!a.grid.empty()) {
    const std::string text = a.grid.front() == '[' ? a.grid : read_file(a.grid);
    grid = parse_grid(text);
  }
  const IdentityReport report = run_suite(suite, grid, ctx);
  std::ostringstream os;
  if (a.common.format == "json") {
    os << to_json(report, ctx.output_digits());
  } else {
    const char sep = a.common.format == "csv" ? ',' : ' ';
    if (a.common.format == "csv") {
      os << "label,kind,re,im,abs_residual,budget,tolerance,pass\n";
    }
    for (const auto& e : report.entries) {
      os << e.label << sep << e.point_kind << sep << render_real(e.point.re, 6) << sep
         << render_real(e.point.im, 6) << sep << render_real(e.abs_residual, 4) << sep
         << render_real(e.budget, 4) << sep << render_real(e.tolerance, 4) << sep
         << (e.pass ? "PASS" : "FAIL");
      if (e.error && a.common.format == "text") {
        os << " (" << *e.error << ")";
      }
      os << "\n";
    }
    if (a.common.format == "text") {
      os << "suite " << report.identity << ": " << report.entries.size() << " entries, max_abs "
         << render_real(report.max_abs, 4) << ", " << (report.all_pass ? "all pass" : "FAILURES")
         << "\n";
    }
  }
  emit(a.common, out, os.str());
  return report.all_pass ? Exit::ok : Exit::verify_failed;
}

// ---------------------------------------------------------------------------
// stokes

struct StokesArgs {
  Common common;
  std::string abs_alpha = "1";
  std::string eps_seq = "0.2,0.1,0.05,0.025";
};

int cmd_stokes(const StokesArgs& a, std::ostream& out) {
  const PrecisionContext ctx = a.common.context();
  PrecisionScope scope(ctx);
  const Real A = parse_real(a.abs_alpha);
  const std::vector<Real> eps = parse_real_list(a.eps_seq);
  const StokesDecomposition d = stokes_decompose(A, eps, ctx);
  const bool lower = d.matched_side == "lower";
  const unsigned digits = 20;

  std::ostringstream table;
  table << "eps,L1_re,L1_im,L2_re,L2_im,real_pred_1,real_pred_2,imag_pred_1,imag_pred_2,"
           "residual,residual_real,residual_imag\n";
  for (const auto& r : d.rows) {
    const Vec2& v = lower ? r.lower : r.upper;
    table << render_real(r.eps, 6) << "," << render_real(v[0].re, digits) << ","
          << render_real(v[0].im, digits) << "," << render_real(v[1].re, digits) << ","
          << render_real(v[1].im, digits) << "," << render_real(d.prediction.real_part[0].re, digits)
          << "," << render_real(d.prediction.real_part[1].re, digits) << ","
          << render_real(d.prediction.imag_part[0].re, digits) << ","
          << render_real(d.prediction.imag_part[1].re, digits) << ","
          << render_real(r.residual, 6) << "," << render_real(r.residual_real, 6) << ","
          << render_real(r.residual_imag, 6) << "\n";
  }

  ordered_json s;
  s["abs_alpha"] = render_real(A, digits);
  s["matched_side"] = d.matched_side;
  s["upper_sign"] = d.upper_sign;
  s["monotone"] = d.monotone;
  s["residual_real"] = render_real(d.residual_real, 6);
  s["residual_imag"] = render_real(d.residual_imag, 6);
  s["extrapolation_spread"] = render_real(d.extrapolation_spread, 6);
  s["residual_other_side"] = render_real(d.residual_other_side, 6);
  s["residual_plain"] = render_real(d.residual_plain, 6);
  s["residual_direct"] = render_real(d.residual_direct, 6);
  s["residual_median"] = render_real(d.residual_median, 6);
  const Vec2& ext = lower ? d.extrapolated_lower : d.extrapolated_upper;
  s["extrapolated"] = {{render_real(ext[0].re, digits), render_real(ext[0].im, digits)},
                       {render_real(ext[1].re, digits), render_real(ext[1].im, digits)}};
  s["literal_ratio"] = {render_real(d.literal_ratio[0].re, 12),
                        render_real(d.literal_ratio[1].re, 12)};
  ordered_json rows = ordered_json::array();
  for (const auto& r : d.rows) {
    rows.push_back({{"eps", render_real(r.eps, 6)}, {"residual", render_real(r.residual, 6)}});
  }
  s["rows"] = rows;

  std::ostringstream os;
  if (a.common.format == "json") {
    os << s.dump(2) << "\n";
  } else if (a.common.format == "csv") {
    os << table.str();
  } else {
    os << table.str();
    for (const auto& [k, v] : s.items()) {
      if (k != "rows") {
        os << "# " << k << ": " << v.dump() << "\n";
      }
    }
  }
  emit(a.common, out, os.str());
  return Exit::ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision mock theta functions and identity checks"};
  app.name("mocklab");
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a function at a point");
  add_common(eval, ev.common, "text");
  eval->add_option("--fn", ev.fn,
                   "chi0 chi1 omega f rho xi x0 x1 eta theta2 theta3 theta4 L W2 W3 lvec")
      ->required();
  eval->add_option("--tau", ev.tau, "Point in the upper half-plane");
  eval->add_option("--alpha", ev.alpha, "alpha = -pi i tau");
  eval->add_option("--q", ev.q, "Nome");
  eval->add_option("--u", ev.u, "Argument of the unary series");
  eval->add_option("--r", ev.r, "Parameter r of L (rational)")->capture_default_str();

  CoeffsArgs co;
  auto* coeffs = app.add_subcommand("coeffs", "Exact series coefficients as n,numerator,denominator");
  add_common(coeffs, co.common, "csv");
  coeffs->add_option("--fn", co.fn, "Mock theta id, partition, x0, x1, k0 or k1")->required();
  coeffs->add_option("--n", co.n, "Highest exponent")->capture_default_str();

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Run an identity suite and write its report");
  add_common(verify, ve.common, "json");
  verify->add_option("--suite", ve.suite, "mf5 mf5_stokes mf3 theta_eta algebra wronskian all")
      ->capture_default_str();
  verify->add_option("--grid", ve.grid, "Grid JSON file (or inline JSON list)");

  StokesArgs st;
  auto* stokes = app.add_subcommand("stokes", "Lateral limits along the Stokes line");
  add_common(stokes, st.common, "csv");
  stokes->add_option("--abs-alpha", st.abs_alpha, "|alpha|")->capture_default_str();
  stokes->add_option("--eps-seq", st.eps_seq, "Decreasing distances to the Stokes line")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::domain;
  }

  try {
    if (*eval) {
      return cmd_eval(ev, out);
    }
    if (*coeffs) {
      return cmd_coeffs(co, out);
    }
    if (*verify) {
      return cmd_verify(ve, out);
    }
    return cmd_stokes(st, out);
  } catch (const DomainError& e) {
    err << "mocklab: domain error: " << e.what() << "\n";
    return Exit::domain;
  } catch (const PoleProximityError& e) {
    err << "mocklab: pole proximity: " << e.what() << "\n";
    return Exit::domain;
  } catch (const ConvergenceError& e) {
    err << "mocklab: no convergence: " << e.what() << "\n";
    return Exit::convergence;
  } catch (const ExtrapolationError& e) {
    err << "mocklab: extrapolation unstable: " << e.what() << "\n";
    return Exit::convergence;
  } catch (const PrecisionError& e) {
    err << "mocklab: precision exhausted: " << e.what() << "\n";
    return Exit::convergence;
  } catch (const Error& e) {
    err << "mocklab: " << e.what() << "\n";
    return Exit::convergence;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("mocklab");
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mocklab::cli
