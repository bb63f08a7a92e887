#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/qsqrt3.hpp"
#include "hesse/curves/cubic_form.hpp"
#include "hesse/curves/hesse.hpp"
#include "hesse/curves/plot.hpp"
#include "hesse/curves/serialize.hpp"
#include "hesse/dynamics/chains.hpp"
#include "hesse/dynamics/counts.hpp"
#include "hesse/dynamics/hmap.hpp"
#include "hesse/dynamics/loops.hpp"
#include "hesse/dynamics/oracle.hpp"
#include "hesse/dynamics/orbit.hpp"
#include "hesse/elliptic/eab.hpp"
#include "hesse/halving_geometry/contacts.hpp"
#include "hesse/normal_forms/normal_forms.hpp"

namespace hesse::cli {

enum Exit : int { kOk = 0, kInputError = 1, kPrecondition = 2, kVerificationFailure = 3 };

/// Exit code for a library error: malformed input is 1, everything else is
/// a violated precondition (2).
inline int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
      return kInputError;
    default:
      return kPrecondition;
  }
}

inline double parse_real(const std::string& s) { return parse_qsqrt3(s).to_double(); }

inline ExtendedParam parse_param(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "∞") return ExtendedParam::infinity();
  return ExtendedParam(parse_rational(s));
}

inline std::string read_input(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(arg);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json qsqrt3_form_json(const BasicCubicForm<QSqrt3>& f) {
  nlohmann::json m = nlohmann::json::object();
  for (std::size_t i = 0; i < 10; ++i) {
    if (!(f[i] == QSqrt3(0))) m[cubic_monomial_keys()[i]] = f[i].to_string();
  }
  return {{"monomials", m}};
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  f << text;
}

/// A real point on the Hesse derivative of f in the chart z = 1, found by
/// fixing x and solving the cubic in y. Used for the two-loop curve check.
inline std::optional<std::array<double, 3>> point_on_cubic(const RealCubicForm& f, double x) {
  // f(x, y, 1) = A y^3 + B y^2 + C y + D
  const double A = f.at(0, 3, 0);
  const double B = f.at(1, 2, 0) * x + f.at(0, 2, 1);
  const double C = f.at(2, 1, 0) * x * x + f.at(1, 1, 1) * x + f.at(0, 1, 2);
  const double D = f(x, 0.0, 1.0);
  std::vector<double> ys;
  if (std::abs(A) > 1e-14) {
    for (const auto& r : solve_cubic(A, B, C, D)) {
      if (std::abs(r.imag()) <= 1e-9) ys.push_back(r.real());
    }
  } else if (std::abs(B) > 1e-14) {
    const double disc = C * C - 4 * B * D;
    if (disc >= 0) ys.push_back((-C + std::sqrt(disc)) / (2 * B));
  } else if (std::abs(C) > 1e-14) {
    ys.push_back(-D / C);
  }
  if (ys.empty()) return std::nullopt;
  return std::array<double, 3>{x, *std::max_element(ys.begin(), ys.end()), 1.0};
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hesse derivatives of plane cubics: dynamics, counts, contact points and normal forms", "hesse_lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  // derive
  auto* derive = app.add_subcommand("derive", "Successive Hesse derivatives of a cubic or of a Hesse-form parameter");
  std::string derive_input, derive_c;
  int derive_iterations = 1;
  derive->add_option("--input", derive_input, "cubic as JSON text, a JSON file path, or - for stdin");
  derive->add_option("--hesse-c", derive_c, "parameter c of x^3+y^3+z^3+cxyz (rational or 'inf')");
  derive->add_option("--iterations,-k", derive_iterations, "number of derivatives")->check(CLI::PositiveNumber);

  // counts
  auto* counts = app.add_subcommand("counts", "Closed-form counting tables with oracle cross-checks");
  int counts_max = 16, counts_oracle = 0;
  bool counts_sturm = false;
  std::string counts_csv;
  counts->add_option("--max-n", counts_max, "largest n")->check(CLI::Range(1, 38));
  counts->add_option("--oracle-max", counts_oracle, "run the exact oracle for n up to this value");
  counts->add_flag("--sturm", counts_sturm, "count roots with Sturm chains instead of Descartes bisection");
  counts->add_option("--csv", counts_csv, "write the table as CSV to this path");

  // verify-contacts
  auto* contacts = app.add_subcommand("verify-contacts", "Check the tangent contact points from a point on the Hesse derivative");
  std::string vc_a = "0", vc_b, vc_x0;
  int vc_sign = 1;
  std::uint64_t vc_seed = 1;
  bool vc_two_loop = false;
  contacts->add_option("--a", vc_a, "a (accepts p+q*sqrt3)");
  contacts->add_option("--b", vc_b, "b, nonzero (accepts p+q*sqrt3)");
  contacts->add_option("--x0", vc_x0, "x-coordinate of P; random when omitted");
  contacts->add_option("--y-sign", vc_sign, "sign of y0")->check(CLI::IsMember({-1, 1}));
  contacts->add_option("--seed", vc_seed, "seed for the random choice of x0");
  contacts->add_flag("--two-loop-curve", vc_two_loop, "use the D3-symmetric curve fixed by two Hesse derivatives");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "Render f(x, y, 1) = 0 by marching squares");
  std::string plot_input, plot_c, plot_out, plot_format = "svg";
  std::vector<double> plot_window{-4, 4, -4, 4};
  int plot_res = 512;
  bool plot_hesse = false, plot_two_loop = false;
  plot_cmd->add_option("--input", plot_input, "cubic as JSON text or file");
  plot_cmd->add_option("--hesse-c", plot_c, "plot x^3+y^3+z^3+cxyz ('inf' for xyz)");
  plot_cmd->add_flag("--two-loop-curve", plot_two_loop, "plot the D3-symmetric two-loop curve");
  plot_cmd->add_flag("--with-hesse", plot_hesse, "add the Hesse derivative as a second layer");
  plot_cmd->add_option("--window", plot_window, "xmin xmax ymin ymax")->expected(4);
  plot_cmd->add_option("--resolution", plot_res, "grid size");
  plot_cmd->add_option("--format", plot_format, "svg or csv")->check(CLI::IsMember({"svg", "csv"}));
  plot_cmd->add_option("--out", plot_out, "output file (stdout when omitted)");

  // loops
  auto* loops = app.add_subcommand("loops", "Cycles of minimal period n of the parameter map");
  int loops_n = 2;
  std::string loops_mode = "exact";
  loops->add_option("--n", loops_n, "period")->check(CLI::PositiveNumber);
  loops->add_option("--mode", loops_mode, "exact (n <= 6) or float (n <= 10)")->check(CLI::IsMember({"exact", "float"}));

  // chains
  auto* chains = app.add_subcommand("chains", "Start values reaching -3 or infinity in exactly n steps");
  int chains_n = 1;
  std::string chains_target = "minus3";
  chains->add_option("--n", chains_n, "chain length")->check(CLI::PositiveNumber);
  chains->add_option("--target", chains_target, "minus3 or infinity")->check(CLI::IsMember({"minus3", "infinity"}));

  // growth
  auto* growth = app.add_subcommand("growth", "A chain start beyond +-B by backward iteration from 6");
  double growth_bound = 100;
  growth->add_option("--bound", growth_bound, "B > 0")->check(CLI::PositiveNumber);

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "Forward orbit of a parameter under the parameter map");
  std::string orbit_c0 = "0";
  int orbit_steps = 10;
  double orbit_tol = 1e-9;
  bool orbit_float = false;
  orbit_cmd->add_option("--c0", orbit_c0, "start (rational, decimal or 'inf')");
  orbit_cmd->add_option("--max-steps", orbit_steps, "step budget")->check(CLI::PositiveNumber);
  orbit_cmd->add_option("--tol", orbit_tol, "tolerance for floating states");
  orbit_cmd->add_flag("--float", orbit_float, "iterate in floating point");

  // halve
  auto* halve_cmd = app.add_subcommand("halve", "The four points Q with 2Q = -P on y^2 = x^3 + a x^2 + b x");
  std::string hv_a = "0", hv_b, hv_x0;
  int hv_sign = 1;
  halve_cmd->add_option("--a", hv_a, "a");
  halve_cmd->add_option("--b", hv_b, "b")->required();
  halve_cmd->add_option("--x0", hv_x0, "x-coordinate of P")->required();
  halve_cmd->add_option("--y-sign", hv_sign, "sign of y0")->check(CLI::IsMember({-1, 1}));

  // convert
  auto* convert = app.add_subcommand("convert", "Parameter maps between the Hesse, Weierstrass-type and D3 forms");
  std::string cv_q, cv_c, cv_d3;
  bool cv_loop2 = false;
  convert->add_option("--q", cv_q, "q (accepts p+q*sqrt3): print c, a, b");
  convert->add_option("--c", cv_c, "c: print the real q with c(q) = c");
  convert->add_option("--d3", cv_d3, "c (accepts p+q*sqrt3): print the D3-symmetric cubic");
  convert->add_flag("--loop2-check", cv_loop2, "exact check of the two-cycle example");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*derive) {
      if (derive_input.empty() == derive_c.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --input, --hesse-c");
      if (!derive_c.empty()) {
        ExtendedParam c = parse_param(derive_c);
        std::string line;
        for (int i = 0; i < derive_iterations; ++i) {
          c = step(c);
          line += (i ? ", " : "") + c.to_string();
        }
        out << line << "\n";
        return kOk;
      }
      CubicForm f = cubic_from_json_text(read_input(derive_input));
      for (int i = 1; i <= derive_iterations; ++i) {
        f = hesse_derivative(f);
        nlohmann::json j = to_json(f);
        j["iteration"] = i;
        out << j.dump() << "\n";
      }
      return kOk;
    }

    if (*counts) {
      OracleOptions opt;
      opt.counter = counts_sturm ? RootCounter::Sturm : RootCounter::Descartes;
      if (counts_oracle > opt.nmax) {
        throw Error(ErrorKind::BudgetExceeded, "--oracle-max exceeds the oracle budget " + std::to_string(opt.nmax));
      }
      const int omax = std::min(counts_oracle, counts_max);
      std::vector<std::future<std::vector<CountReport>>> jobs;
      for (int n = 1; n <= omax; ++n) jobs.push_back(std::async(std::launch::async, [n, opt] { return oracle_reports(n, opt); }));
      std::vector<std::vector<CountReport>> oracle(static_cast<std::size_t>(omax));
      for (int n = 1; n <= omax; ++n) oracle[n - 1] = jobs[n - 1].get();
      bool agree = true;
      std::ostringstream csv;
      csv << "n,chi,Phi,rho,Lambda,oracle_chi,oracle_Phi,oracle_rho,agree\n";
      char buf[160];
      std::snprintf(buf, sizeof buf, "%4s %12s %12s %12s %12s  %s\n", "n", "chi", "Phi", "rho", "Lambda", "oracle");
      out << buf;
      for (int n = 1; n <= counts_max; ++n) {
        const Count chi = count_critical_points(n), phi = count_fixed_points(n), rho = count_zeros(n);
        const std::string lam = n % 2 == 0 ? std::to_string(count_loops(n)) : "";
        std::string oracle_txt = "-";
        std::string ochi, ophi, orho, oagree;
        if (n <= omax) {
          bool ok = true;
          for (const auto& r : oracle[n - 1]) {
            ok = ok && r.agreement();
            const std::string v = std::to_string(*r.oracle);
            if (r.kind == CountKind::Critical) ochi = v;
            if (r.kind == CountKind::Fixed) ophi = v;
            if (r.kind == CountKind::Zero) orho = v;
          }
          agree = agree && ok;
          oagree = ok ? "true" : "false";
          oracle_txt = ochi + "/" + ophi + "/" + orho + (ok ? " ok" : " MISMATCH");
        }
        std::snprintf(buf, sizeof buf, "%4d %12lld %12lld %12lld %12s  %s\n", n, static_cast<long long>(chi),
                      static_cast<long long>(phi), static_cast<long long>(rho), lam.c_str(), oracle_txt.c_str());
        out << buf;
        csv << n << "," << chi << "," << phi << "," << rho << "," << lam << "," << ochi << "," << ophi << "," << orho
            << "," << oagree << "\n";
      }
      if (!counts_csv.empty()) write_text(counts_csv, csv.str(), out);
      return agree ? kOk : kVerificationFailure;
    }

    if (*contacts) {
      ContactReport rep;
      if (vc_two_loop) {
        const RealCubicForm f = two_loop_d3_curve<double>();
        const RealCubicForm h = hesse_derivative(f);
        std::mt19937_64 rng(vc_seed);
        std::uniform_real_distribution<double> ux(-3.0, 3.0);
        std::optional<std::array<double, 3>> P;
        double x = vc_x0.empty() ? ux(rng) : parse_real(vc_x0);
        for (int tries = 0; !(P = point_on_cubic(h, x)) && tries < 100; ++tries) x = ux(rng);
        if (!P) throw Error(ErrorKind::NotOnHesseDerivative, "no real point found on the Hesse derivative");
        rep = verify_contacts_general(f, *P);
      } else {
        if (vc_b.empty()) throw Error(ErrorKind::InvalidArgument, "--b is required");
        const double a = parse_real(vc_a), b = parse_real(vc_b);
        const GammaAB g(a, b);
        const EabCurve e = g.hesse_curve();
        double x0;
        if (vc_x0.empty()) {
          // Random x0 with real lines: x0 > 0 and beyond every real root.
          double lo = 0.0;
          for (const Complex& r : {e.e1(), e.e2()}) {
            if (std::abs(r.imag()) < 1e-12) lo = std::max(lo, r.real());
          }
          std::mt19937_64 rng(vc_seed);
          std::uniform_real_distribution<double> u(lo + 0.1, lo + 10.0);
          x0 = u(rng);
        } else {
          x0 = parse_real(vc_x0);
        }
        const EPoint p = e.point_at(Complex(x0), vc_sign);
        rep = verify_contacts(g, p);
      }
      out << rep.to_json().dump() << "\n";
      return rep.pass() ? kOk : kVerificationFailure;
    }

    if (*plot_cmd) {
      PlotSpec spec;
      spec.window = {plot_window[0], plot_window[1], plot_window[2], plot_window[3]};
      spec.resolution = plot_res;
      spec.format = plot_format == "csv" ? PlotFormat::Csv : PlotFormat::Svg;
      const int sources = !plot_input.empty() + !plot_c.empty() + plot_two_loop;
      if (sources != 1) throw Error(ErrorKind::InvalidArgument, "give exactly one of --input, --hesse-c, --two-loop-curve");
      RealCubicForm f;
      if (!plot_input.empty()) {
        f = to_real(cubic_from_json_text(read_input(plot_input)));
      } else if (!plot_c.empty()) {
        const ExtendedParam c = parse_param(plot_c);
        f = c.is_infinite() ? gamma_infinity<double>() : gamma_c<double>(c.real());
      } else {
        f = two_loop_d3_curve<double>();
      }
      spec.layers.push_back({f, "curve", "#1f4e9c"});
      if (plot_hesse) spec.layers.push_back({hesse_derivative(f), "hesse_derivative", "#c0392b"});
      const PlotResult r = plot(spec);
      write_text(plot_out, r.text, out);
      nlohmann::json summary = {{"components", nlohmann::json::array()}};
      for (const auto& c : r.contours) summary["components"].push_back(c.components());
      if (!plot_out.empty()) {
        summary["out"] = plot_out;
        out << summary.dump() << "\n";
      } else {
        err << summary.dump() << "\n";
      }
      if (r.empty()) {
        err << "warning: empty contour\n";
        return kInputError;
      }
      return kOk;
    }

    if (*loops) {
      const LoopSet s = enumerate_loops(loops_n, loops_mode == "float" ? LoopMode::Float : LoopMode::Exact);
      out << s.to_json().dump() << "\n";
      return kOk;
    }

    if (*chains) {
      const ChainSet s = enumerate_chains(chains_target == "minus3" ? ChainTarget::Minus3 : ChainTarget::Infinity, chains_n);
      out << s.to_json().dump() << "\n";
      return kOk;
    }

    if (*growth) {
      const GrowthWitness w = backward_growth_witness(growth_bound);
      const int len = chain_length(w.c, ChainTarget::Minus3, w.n + 1, 1e-6);
      out << nlohmann::json{{"c", w.c}, {"n", w.n}, {"backward", w.backward}, {"verified_length", len}}.dump() << "\n";
      return len == w.n ? kOk : kVerificationFailure;
    }

    if (*orbit_cmd) {
      ExtendedParam c0 = parse_param(orbit_c0);
      if (orbit_float && !c0.is_infinite()) c0 = ExtendedParam(c0.real());
      out << orbit(c0, orbit_steps, orbit_tol).to_json().dump() << "\n";
      return kOk;
    }

    if (*halve_cmd) {
      const EabCurve e(Complex(parse_real(hv_a)), Complex(parse_real(hv_b)));
      const EPoint p = e.point_at(Complex(parse_real(hv_x0)), hv_sign);
      const auto qs = halve(e, p);
      const EPoint minus_p = negate(e, p);
      nlohmann::json pts = nlohmann::json::array();
      bool ok = true;
      for (const auto& q : qs) {
        const double r = detail::point_distance(double_point(e, q), minus_p);
        const bool pass = r <= 1e-7;
        ok = ok && pass;
        pts.push_back({{"Q", detail::cjson(q)}, {"double_residual", r}, {"status", pass ? "PASS" : "FAIL"}});
      }
      out << nlohmann::json{{"P", detail::cjson(p)}, {"halves", pts}, {"status", ok ? "PASS" : "FAIL"}}.dump() << "\n";
      return ok ? kOk : kVerificationFailure;
    }

    if (*convert) {
      bool any = false;
      if (!cv_q.empty()) {
        any = true;
        const QSqrt3 q = parse_qsqrt3(cv_q);
        const auto w = hesse_to_wnf(q);
        out << nlohmann::json{{"q", w.q.to_string()},
                              {"c", w.c.to_string()},
                              {"a", w.a.to_string()},
                              {"b", w.b.to_string()},
                              {"degenerate", w.degenerate}}
                   .dump()
            << "\n";
      }
      if (!cv_c.empty()) {
        any = true;
        out << nlohmann::json{{"c", parse_real(cv_c)}, {"q", wnf_q_from_c(parse_real(cv_c))}}.dump() << "\n";
      }
      if (!cv_d3.empty()) {
        any = true;
        const QSqrt3 c = parse_qsqrt3(cv_d3);
        nlohmann::json j = qsqrt3_form_json(hesse_to_d3(c));
        j["c"] = c.to_string();
        out << j.dump() << "\n";
      }
      if (cv_loop2) {
        any = true;
        const bool ok = wnf_loop2_check();
        out << nlohmann::json{{"loop2_check", ok}}.dump() << "\n";
        if (!ok) return kVerificationFailure;
      }
      if (!any) throw Error(ErrorKind::InvalidArgument, "nothing to convert");
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), out, err);
}

}  // namespace hesse::cli
