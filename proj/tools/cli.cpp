#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "zass/builders.hpp"
#include "zass/casas.hpp"
#include "zass/coeffs.hpp"
#include "zass/json_io.hpp"
#include "zass/quadrature.hpp"
#include "zass/verify.hpp"

namespace zass::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string text6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string text6(Scalar z) {
  if (z.imag() == 0.0) return text6(z.real());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

std::string csv17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

struct ComplexArg {
  double re = 0.0;
  double im = 0.0;
  Scalar value() const { return {re, im}; }
};

void add_complex(CLI::App* app, const std::string& name, ComplexArg& arg, bool required) {
  auto* opt = app->add_option("--" + name, arg.re, "real part of " + name);
  if (required) opt->required();
  app->add_option("--" + name + "-im", arg.im, "imaginary part of " + name);
}

// ---- coeff ---------------------------------------------------------------

struct CoeffRow {
  std::string name;
  std::optional<CoeffValue> value;
  std::string error;
};

int run_coeff(Scalar u, Scalar v, const std::string& format, std::ostream& out) {
  std::vector<CoeffRow> rows;
  rows.push_back({"g_right", g_right(u, v), {}});
  rows.push_back({"g_center", g_center(u, v), {}});
  rows.push_back({"g_left", g_left(u, v), {}});
  try {
    rows.push_back({"f_bch", f_bch(u, v), {}});
  } catch (const PoleError& e) {
    rows.push_back({"f_bch", std::nullopt, e.what()});
  }
  rows.push_back({"gamma_swap", gamma_swap(u, v), {}});
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const CoeffRow& r) { return r.value.has_value(); });

  if (format == "json") {
    Json coeffs = Json::array();
    for (const auto& r : rows) {
      Json item{{"name", r.name}};
      if (r.value) {
        item["value"] = scalar_to_json(r.value->value);
        item["method"] = std::string(to_string(r.value->method));
        item["terms_used"] = r.value->terms_used;
      } else {
        item["error"] = r.error;
      }
      coeffs.push_back(std::move(item));
    }
    Json doc{{"u", scalar_to_json(u)}, {"v", scalar_to_json(v)}, {"coefficients", std::move(coeffs)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "u = " << text6(u) << ", v = " << text6(v) << '\n';
    for (const auto& r : rows) {
      out << pad(r.name, 11) << "= ";
      if (r.value) {
        out << pad(text6(r.value->value), 16) << "[" << to_string(r.value->method) << ", terms " << r.value->terms_used
            << "]\n";
      } else {
        out << "pole (" << r.error << ")\n";
      }
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

// ---- cn-table ------------------------------------------------------------

int run_cn_table(Scalar u, Scalar v, int max_n, double tol, const std::string& format, std::ostream& out) {
  if (max_n < 2) throw UsageError("--max-n: must be >= 2");
  const std::vector<Scalar> rec = recurrence_coefficients(max_n, u, v);
  bool ok = true;
  struct Row {
    int n;
    Scalar closed;
    Scalar recurrence;
    double diff;
  };
  std::vector<Row> rows;
  for (int n = 2; n <= max_n; ++n) {
    const Scalar closed = zass_coeff(n, u, v);
    const Scalar r = rec[static_cast<std::size_t>(n - 2)];
    const double diff = std::abs(closed - r);
    ok = ok && diff <= tol * (1.0 + std::abs(closed));
    rows.push_back({n, closed, r, diff});
  }
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"closed_form", scalar_to_json(r.closed)},
                     {"recurrence", scalar_to_json(r.recurrence)},
                     {"difference", r.diff}});
    }
    out << Json{{"u", scalar_to_json(u)}, {"v", scalar_to_json(v)}, {"rows", std::move(arr)}, {"passed", ok}}.dump(2)
        << '\n';
  } else if (format == "csv") {
    out << "n,closed_re,closed_im,recurrence_re,recurrence_im,difference\n";
    for (const auto& r : rows) {
      out << r.n << ',' << csv17(r.closed.real()) << ',' << csv17(r.closed.imag()) << ',' << csv17(r.recurrence.real())
          << ',' << csv17(r.recurrence.imag()) << ',' << csv17(r.diff) << '\n';
    }
  } else {
    out << "C_n(u = " << text6(u) << ", v = " << text6(v) << ")\n";
    out << pad("n", 4) << pad("closed form", 20) << pad("recurrence", 20) << "difference\n";
    for (const auto& r : rows) {
      out << pad(std::to_string(r.n), 4) << pad(text6(r.closed), 20) << pad(text6(r.recurrence), 20) << text6(r.diff)
          << '\n';
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

// ---- verify --------------------------------------------------------------

void print_report_text(const CheckReport& report, std::ostream& out) {
  out << "pair: " << report.pair_name << '\n';
  for (const auto& r : report.results) {
    out << "  " << pad(r.name, 20) << pad(r.residual == r.residual ? text6(r.residual) : "nan", 14) << "tol "
        << pad(text6(r.tolerance), 8) << (r.passed ? " PASS" : " FAIL");
    for (const auto& [k, v] : r.metadata) {
      if (k == "error") out << "  (" << v << ")";
    }
    out << '\n';
  }
  out << (report.all_passed ? "all checks passed" : "some checks FAILED") << '\n';
}

int run_verify(const std::string& pair_name, const std::string& x_file, const std::string& y_file,
               std::optional<double> tol, const std::string& format, std::ostream& out) {
  std::optional<AlgebraPair> pair;
  if (!pair_name.empty()) {
    if (!x_file.empty() || !y_file.empty()) throw UsageError("--pair excludes --x/--y");
    try {
      pair.emplace(builtin_pair(pair_name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--pair: ") + e.what());
    }
  } else {
    if (x_file.empty() || y_file.empty()) throw UsageError("verify needs --pair NAME or both --x FILE and --y FILE");
    CMatrix x(1);
    CMatrix y(1);
    try {
      x = load_matrix(x_file);
      y = load_matrix(y_file);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (x.dim() != y.dim()) {
      throw UsageError("--x/--y: dimension mismatch (" + std::to_string(x.dim()) + " vs " + std::to_string(y.dim()) + ")");
    }
    const StructureFit fit = infer_uvc(x, y);
    if (fit.fit_residual > 1e-8) {
      out << "[X,Y] is not in span{X, Y, 1}: fit_residual = " << text6(fit.fit_residual) << " (limit 1e-08)\n"
          << "best fit u = " << text6(fit.u) << ", v = " << text6(fit.v) << ", c = " << text6(fit.c) << '\n';
      return kExitUsage;
    }
    try {
      pair.emplace(std::move(x), std::move(y), fit.u, fit.v, fit.c, "files(" + x_file + "," + y_file + ")");
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  const double t = tol.value_or(default_tolerance(*pair));
  const CheckReport report = run_suite(*pair, t);
  if (format == "json") {
    out << report_to_json(report).dump(2) << '\n';
  } else {
    print_report_text(report, out);
  }
  return report.all_passed ? kExitOk : kExitCheckFailed;
}

// ---- sweep ---------------------------------------------------------------

AlgebraPair realize(double u, double v) {
  if (u == 0.0 && v == 0.0) return heisenberg_3x3(1.0);
  for (auto [b, d] : {std::pair{1.0, 1.0}, std::pair{1.0, 2.0}, std::pair{2.0, 1.0}}) {
    if (u * b + v * d != 0.0) return affine_2x2(u, v, b, d);
  }
  throw DegenerateError("no affine realization");
}

struct SweepRow {
  double u = 0.0;
  double v = 0.0;
  double residual = 0.0;
  bool passed = false;
};

SweepRow sweep_point(const std::string& check, double u, double v, double tol) {
  SweepRow row{u, v, std::numeric_limits<double>::infinity(), false};
  try {
    const AlgebraPair pair = realize(u, v);
    if (check == "suite") {
      const CheckReport rep = run_suite(pair, tol);
      row.residual = 0.0;
      for (const auto& r : rep.results) row.residual = std::max(row.residual, r.residual);
      row.passed = rep.all_passed;
    } else {
      const CheckResult r = run_named_check(check, pair, tol);
      row.residual = r.residual;
      row.passed = r.passed;
    }
  } catch (const std::exception&) {
    row.passed = false;
  }
  return row;
}

std::vector<double> lattice(double lo, double hi, int steps) {
  std::vector<double> pts(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    pts[static_cast<std::size_t>(i)] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  }
  return pts;
}

int run_sweep(const std::string& check, double u_min, double u_max, double v_min, double v_max, int steps,
              const std::string& out_file, double tol, std::ostream& out) {
  const auto& names = check_names();
  if (check != "suite" && std::find(names.begin(), names.end(), check) == names.end()) {
    throw UsageError("--check: unknown check '" + check + "'");
  }
  if (steps < 1) throw UsageError("--steps: must be >= 1");
  const std::vector<double> us = lattice(u_min, u_max, steps);
  const std::vector<double> vs = lattice(v_min, v_max, steps);
  const std::size_t total = us.size() * vs.size();

  // Points are independent; rows land in lattice order regardless of which
  // worker finishes first.
  std::vector<SweepRow> rows(total);
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < total; k = next++) {
          rows[k] = sweep_point(check, us[k / vs.size()], vs[k % vs.size()], tol);
        }
      });
    }
  }

  std::ofstream csv(out_file);
  if (!csv) throw UsageError("--out: cannot write '" + out_file + "'");
  csv << "u_re,u_im,v_re,v_im,residual,passed\n";
  std::size_t passed = 0;
  for (const auto& r : rows) {
    csv << csv17(r.u) << ",0," << csv17(r.v) << ",0," << csv17(r.residual) << ',' << (r.passed ? "true" : "false")
        << '\n';
    passed += r.passed ? 1 : 0;
  }
  out << "sweep " << check << ": " << passed << "/" << total << " points passed, wrote " << out_file << '\n';
  return passed == total ? kExitOk : kExitCheckFailed;
}

// ---- integral ------------------------------------------------------------

int run_integral(Scalar u, Scalar v, double tol, const std::string& format, std::ostream& out) {
  const Scalar closed = g_right(u, v).value;
  struct Row {
    int nodes;
    Scalar value;
    double error;
  };
  std::vector<Row> rows;
  for (int n : {8, 16, 32}) {
    const GaussRule rule = gauss_legendre01(n);
    Scalar acc{0.0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * integrand(rule.nodes[i], u, v);
    rows.push_back({n, acc, std::abs(acc - closed)});
  }
  const bool ok = rows.back().error <= tol;
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back({{"nodes", r.nodes}, {"value", scalar_to_json(r.value)}, {"error", r.error}});
    out << Json{{"u", scalar_to_json(u)},
                {"v", scalar_to_json(v)},
                {"closed_form", scalar_to_json(closed)},
                {"quadrature", std::move(arr)},
                {"passed", ok}}
               .dump(2)
        << '\n';
  } else {
    out << "int_0^1 h(s) ds vs g_right(u = " << text6(u) << ", v = " << text6(v) << ") = " << text6(closed) << '\n';
    out << pad("nodes", 8) << pad("quadrature", 20) << "|quadrature - g_right|\n";
    for (const auto& r : rows) out << pad(std::to_string(r.nodes), 8) << pad(text6(r.value), 20) << text6(r.error) << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form disentangling coefficients for [X,Y] = uX + vY + c*1", "zass"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"text", "json", "csv"};

  ComplexArg cu, cv;
  std::string coeff_format = "text";
  auto* coeff = app.add_subcommand("coeff", "Evaluate g_r, g_c, g_l, f and gamma at (u, v)");
  add_complex(coeff, "u", cu, true);
  add_complex(coeff, "v", cv, true);
  coeff->add_option("--format", coeff_format)->check(CLI::IsMember({"text", "json"}));

  ComplexArg tu, tv;
  int max_n = 10;
  double table_tol = kDefaultTolerance;
  std::string table_format = "text";
  auto* table = app.add_subcommand("cn-table", "Tabulate C_n from the closed form and from the recurrence");
  add_complex(table, "u", tu, true);
  add_complex(table, "v", tv, true);
  table->add_option("--max-n", max_n, "largest n")->required();
  table->add_option("--tol", table_tol)->check(CLI::PositiveNumber);
  table->add_option("--format", table_format)->check(CLI::IsMember(formats));

  std::string pair_name, x_file, y_file, verify_format = "text";
  std::optional<double> verify_tol;
  auto* verify = app.add_subcommand("verify", "Run the identity suite on a built-in pair or on matrix files");
  verify->add_option("--pair", pair_name, "built-in pair name")->check(CLI::IsMember(builtin_pair_names()));
  verify->add_option("--x", x_file, "JSON matrix file for X");
  verify->add_option("--y", y_file, "JSON matrix file for Y");
  verify->add_option("--tol", verify_tol)->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  std::string sweep_check, sweep_out;
  double u_min = 0, u_max = 0, v_min = 0, v_max = 0, sweep_tol = kDefaultTolerance;
  int steps = 0;
  auto* sweep = app.add_subcommand("sweep", "Residual of one check over a real (u, v) lattice, written as CSV");
  sweep->add_option("--check", sweep_check, "check name or 'suite'")->required();
  sweep->add_option("--u-min", u_min)->required();
  sweep->add_option("--u-max", u_max)->required();
  sweep->add_option("--v-min", v_min)->required();
  sweep->add_option("--v-max", v_max)->required();
  sweep->add_option("--steps", steps, "points per axis")->required();
  sweep->add_option("--out", sweep_out, "CSV output file")->required();
  sweep->add_option("--tol", sweep_tol)->check(CLI::PositiveNumber);

  ComplexArg iu, iv;
  double integral_tol = kDefaultTolerance;
  std::string integral_format = "text";
  auto* integral = app.add_subcommand("integral", "Compare Gauss-Legendre quadrature of h(s) with g_right");
  add_complex(integral, "u", iu, true);
  add_complex(integral, "v", iv, true);
  integral->add_option("--tol", integral_tol)->check(CLI::PositiveNumber);
  integral->add_option("--format", integral_format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*coeff) return run_coeff(cu.value(), cv.value(), coeff_format, out);
    if (*table) return run_cn_table(tu.value(), tv.value(), max_n, table_tol, table_format, out);
    if (*verify) return run_verify(pair_name, x_file, y_file, verify_tol, verify_format, out);
    if (*sweep) return run_sweep(sweep_check, u_min, u_max, v_min, v_max, steps, sweep_out, sweep_tol, out);
    if (*integral) return run_integral(iu.value(), iv.value(), integral_tol, integral_format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace zass::cli
