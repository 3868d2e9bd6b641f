#include "specenv/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "specenv/csv_io.hpp"
#include "specenv/finite_module.hpp"
#include "specenv/fourier.hpp"
#include "specenv/kernel_operator.hpp"
#include "specenv/l1_bounds.hpp"
#include "specenv/runtime.hpp"
#include "specenv/similarity.hpp"
#include "specenv/verify.hpp"
#include "specenv/windows.hpp"

namespace specenv::cli {

namespace {

using nlohmann::json;

void emit_json(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << std::endl;
    return;
  }
  std::ofstream out(path);
  if (!out) throw config_error("cannot open report for writing: " + path);
  out << j.dump(2) << '\n';
}

json base_config(const std::string& subcommand) {
  json cfg;
  cfg["subcommand"] = subcommand;
  cfg["threads"] = thread_count();
  return cfg;
}

std::string derived_time_path(const std::string& out) {
  const auto dot = out.rfind('.');
  if (dot == std::string::npos) return out + "_time";
  return out.substr(0, dot) + "_time" + out.substr(dot);
}

struct WindowsArgs {
  std::string family;
  double a = 1.0;
  double n = 2.0;
  double R = 40.0;
  int N = 4096;
  std::string out;
  std::string out_time;
};

int cmd_windows(const WindowsArgs& args) {
  PiecewiseSymbol sym = [&]() {
    if (args.family == "trapezoid") return PiecewiseSymbol::trapezoid(args.a);
    if (args.family == "omega") return PiecewiseSymbol::omega(args.a);
    if (args.family == "triangle") return PiecewiseSymbol::triangle(args.a);
    if (args.family == "gentrap") {
      return PiecewiseSymbol::generalized_trapezoid(args.a, args.n);
    }
    throw config_error("unknown window family: " + args.family);
  }();

  const Grid grid = make_grid(args.R, args.N);
  const FreqGridFunction symbol_samples = sample_freq(
      grid, [&](double xi) { return Complex(sym(xi), 0.0); });
  const GridFunction time_samples =
      sample(grid, [&](double t) { return symbol_time_value(sym, t); });

  write_csv(symbol_samples, args.out);
  const std::string tpath =
      args.out_time.empty() ? derived_time_path(args.out) : args.out_time;
  write_csv(time_samples, tpath);
  return 0;
}

int cmd_l1bound(const std::string& input, const std::string& out) {
  const GridFunction f = read_grid_function(input);
  const L1Check chk = l1_bound_check(f);

  json rep;
  rep["config"] = base_config("l1bound");
  rep["config"]["input"] = input;
  rep["config"]["R"] = sig15(f.grid.half_width);
  rep["config"]["N"] = f.grid.size();
  rep["l1"] = sig15(chk.l1);
  rep["l2_hat"] = sig15(chk.detail.l2_hat);
  rep["l2_hat_deriv"] = sig15(chk.detail.l2_hat_deriv);
  rep["bound"] = sig15(chk.bound);
  rep["a_opt"] = sig15(chk.detail.a_opt);
  rep["holds"] = chk.holds;
  emit_json(rep, out);
  return 0;
}

struct KernelArgs {
  std::string h;
  double a = 1.0;
  std::string v_path;
  bool sandwich = false;
  std::string out;
  std::string report;
};

int cmd_kernel(const KernelArgs& args) {
  const GridFunction v = read_grid_function(args.v_path);
  const double nv = norm_l2(v);

  TimeKernel h;
  double h_l2 = 0.0;   // L2 norm of the time window
  double h_inf = 0.0;  // sup norm (bound for psi)
  if (args.h == "phi") {
    h = [a = args.a](double t) { return Complex(phi_time(a, t), 0.0); };
    h_l2 = 2.0 * std::sqrt(args.a / (3.0 * M_PI));
    h_inf = 3.0 * args.a / (2.0 * M_PI);
  } else if (args.h == "psi") {
    h = [a = args.a](double t) { return psi_kernel_value(a, t); };
    h_l2 = std::sqrt(2.0 * (1.0 - std::log(2.0)) / (args.a * M_PI));
    h_inf = 1.0 / M_PI + 1.0;
  } else if (args.h == "gamma") {
    h = [a = args.a](double t) { return Complex(gamma_time(a, t), 0.0); };
    h_l2 = std::sqrt(args.a / (3.0 * M_PI));
    h_inf = args.a / (2.0 * M_PI);
  } else {
    throw config_error("unknown kernel window: " + args.h);
  }

  const KernelOperator op =
      args.sandwich ? sandwich_kernel(h, v) : smoothed_kernel(h, v);
  const double hs = op.hs_norm();
  // smoothed: exact identity |T(h)V|_2 = |h|_2 |v|_2 / sqrt(2);
  // sandwich: only the upper bound |V T(h) V|_2 <= |h|_inf |v|_2^2 / sqrt(2)
  const double predicted = args.sandwich ? h_inf * nv * nv / std::sqrt(2.0)
                                         : h_l2 * nv / std::sqrt(2.0);
  if (!args.out.empty()) {
    write_matrix_csv(op.matrix, args.out);
  }

  json rep;
  rep["config"] = base_config("kernel");
  rep["config"]["h"] = args.h;
  rep["config"]["a"] = sig15(args.a);
  rep["config"]["v"] = args.v_path;
  rep["config"]["sandwich"] = args.sandwich;
  rep["config"]["R"] = sig15(v.grid.half_width);
  rep["config"]["N"] = v.grid.size();
  rep["hs_norm"] = sig15(hs);
  rep["hs_predicted"] = sig15(predicted);
  rep["rel_err"] = sig15((hs - predicted) / predicted);
  if (args.sandwich) rep["bound_satisfied"] = hs <= predicted * (1.0 + 1e-12);
  emit_json(rep, args.report);
  return 0;
}

struct SpecmapArgs {
  std::string freqs;
  std::string symbol;
  std::string out;
};

std::vector<double> parse_freq_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    try {
      out.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw config_error("bad frequency entry: " + cell);
    }
  }
  if (out.empty()) throw config_error("empty frequency list");
  return out;
}

APFunction read_ap1_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open file: " + path);
  std::vector<Complex> coeffs;
  std::vector<double> expo;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;  // header row
      }
      throw config_error("bad almost-periodic coefficient row: " + line);
    }
    first = false;
    if (row.size() != 3) {
      throw config_error("almost-periodic rows need re,im,exponent: " + path);
    }
    coeffs.emplace_back(row[0], row[1]);
    expo.push_back(row[2]);
  }
  if (coeffs.empty()) throw config_error("no coefficients in " + path);
  CVector c(coeffs.size());
  RVector t(expo.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    c[i] = coeffs[i];
    t[i] = expo[i];
  }
  return APFunction(std::move(c), std::move(t));
}

Symbol parse_symbol(const std::string& text) {
  if (text == "id") return [](double xi) { return Complex(xi, 0.0); };
  if (text == "square") return [](double xi) { return Complex(xi * xi, 0.0); };
  if (text == "exp") return [](double xi) { return std::exp(Complex(0, xi)); };
  if (text.rfind("trapezoid:", 0) == 0) {
    const double a = std::stod(text.substr(10));
    PiecewiseSymbol tau = PiecewiseSymbol::trapezoid(a);
    return [tau](double xi) { return Complex(tau(xi), 0.0); };
  }
  if (text.rfind("ap1:", 0) == 0) {
    return read_ap1_file(text.substr(4)).as_symbol();
  }
  throw config_error("unknown symbol: " + text);
}

int cmd_specmap(const SpecmapArgs& args) {
  const FiniteModuleRep rep(parse_freq_list(args.freqs));
  const Symbol sym = parse_symbol(args.symbol);
  const SpectralMapping m = check_spectral_mapping(rep, sym);

  auto points_json = [](const SpectrumSet& s) {
    json arr = json::array();
    for (const Complex& p : s.points()) {
      arr.push_back({sig15(p.real()), sig15(p.imag())});
    }
    return arr;
  };
  json rep_json;
  rep_json["config"] = base_config("specmap");
  rep_json["config"]["freqs"] = args.freqs;
  rep_json["config"]["symbol"] = args.symbol;
  rep_json["sigma"] = points_json(m.sigma);
  rep_json["image"] = points_json(m.image);
  rep_json["hausdorff"] = sig15(m.hausdorff);
  rep_json["equal"] = m.equal;
  emit_json(rep_json, args.out);
  return 0;
}

struct EnvelopeArgs {
  std::string v_path;
  std::string matrixA;
  std::string matrixB;
  int N = 0;
  double R = 0.0;
  std::string out;
  std::string eigs;
  std::string report;
};

void write_envelope_csv(const Envelope& env, double r_max,
                        const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw config_error("cannot open for writing: " + path);
  out << "r,f\n";
  const int samples = 2000;
  for (int i = 0; i <= samples; ++i) {
    const double r = -r_max + 2.0 * r_max * i / samples;
    out << fmt15(r) << ',' << fmt15(env(r)) << '\n';
  }
}

void write_eigs_csv(const std::vector<Complex>& eigs, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw config_error("cannot open for writing: " + path);
  out << "re,im\n";
  for (const Complex& e : eigs) {
    out << fmt15(e.real()) << ',' << fmt15(e.imag()) << '\n';
  }
}

int cmd_envelope(const EnvelopeArgs& args) {
  json rep;
  rep["config"] = base_config("envelope");

  if (!args.matrixA.empty() || !args.matrixB.empty()) {
    if (args.matrixA.empty() || args.matrixB.empty()) {
      throw config_error("matrix mode needs both --matrixA and --matrixB");
    }
    const RVector A = read_reals_csv(args.matrixA);
    const CMatrix B = read_matrix_csv(args.matrixB);
    if (B.rows() != A.size() || B.cols() != A.size()) {
      throw config_error("matrix sizes do not match the diagonal");
    }
    const Envelope env = envelope(A, B);
    const Containment c = check_containment(A, B, env);
    rep["config"]["matrixA"] = args.matrixA;
    rep["config"]["matrixB"] = args.matrixB;
    rep["hs_B"] = sig15(env.hs_total);
    rep["a_star"] = nullptr;
    rep["violations"] = c.violations;
    rep["residual"] = nullptr;
    rep["margin"] = sig15(c.margin);
    rep["tail_l2"] = sig15(env.tail_l2());
    write_envelope_csv(env, env.tail.size() + 2.0 * env.hs_total + 2.0,
                       args.out);
    write_eigs_csv(c.eigenvalues, args.eigs);
    emit_json(rep, args.report);
    return 0;
  }

  if (args.v_path.empty()) {
    throw config_error("envelope needs --v or the --matrixA/--matrixB pair");
  }
  GridFunction v = read_grid_function(args.v_path);
  // optional resampling onto a different grid
  const double R = args.R > 0.0 ? args.R : v.grid.half_width;
  const int N = args.N > 0 ? args.N : 1024;
  if (R != v.grid.half_width || N != v.grid.size()) {
    const Grid g = make_grid(R, N);
    GridFunction source = v;
    v = sample(g, [&](double t) { return interp_value(source, t); });
  }

  const OperatorEnvelope oe = operator_envelope(v);
  rep["config"]["v"] = args.v_path;
  rep["config"]["R"] = sig15(v.grid.half_width);
  rep["config"]["N"] = v.grid.size();
  rep["hs_B"] = sig15(oe.hs_B);
  rep["a_star"] = sig15(oe.a);
  rep["violations"] = oe.violations;
  rep["residual"] = sig15(oe.residual);
  rep["tail_l2"] = sig15(oe.env.tail_l2());
  write_envelope_csv(oe.env, oe.env.tail.size() + 2.0 * oe.env.hs_total + 2.0,
                     args.out);
  write_eigs_csv(oe.eigs, args.eigs);
  emit_json(rep, args.report);
  return 0;
}

int cmd_verify(const std::string& suite, unsigned long long seed,
               const std::string& out) {
  const auto checks = run_verify_suite(suite, seed);
  json rep;
  rep["config"] = base_config("verify");
  rep["config"]["suite"] = suite;
  rep["config"]["seed"] = seed;
  json arr = json::array();
  for (const auto& c : checks) {
    json item;
    item["check"] = c.check;
    item["expected"] = sig15(c.expected);
    item["actual"] = sig15(c.actual);
    item["tol"] = sig15(c.tol);
    item["pass"] = c.pass;
    arr.push_back(item);
  }
  rep["checks"] = arr;
  rep["all_pass"] = all_pass(checks);
  emit_json(rep, out);
  return all_pass(checks) ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv) {
  configure_threads();

  CLI::App app{"window calculus, kernel operators and spectrum envelopes"};
  app.require_subcommand(1);

  WindowsArgs wargs;
  auto* windows = app.add_subcommand("windows", "emit a window symbol and its time-domain transform");
  windows->add_option("--family", wargs.family, "trapezoid|omega|triangle|gentrap")->required();
  windows->add_option("--a", wargs.a, "window scale")->required();
  windows->add_option("--n", wargs.n, "shoulder ratio for gentrap");
  windows->add_option("--R", wargs.R, "grid half width");
  windows->add_option("--N", wargs.N, "grid size (even)");
  windows->add_option("--out", wargs.out, "symbol CSV path")->required();
  windows->add_option("--out-time", wargs.out_time, "time-domain CSV path");

  std::string l1_input, l1_out;
  auto* l1 = app.add_subcommand("l1bound", "L1-norm estimate from the frequency side");
  l1->add_option("--input", l1_input, "grid function CSV")->required();
  l1->add_option("--out", l1_out, "JSON report path");

  KernelArgs kargs;
  auto* kernel = app.add_subcommand("kernel", "assemble a smoothed reflection kernel");
  kernel->set_help_flag("--help", "print help");  // frees -h for the window flag
  kernel->add_option("--h", kargs.h, "phi|psi|gamma")->required();
  kernel->add_option("--a", kargs.a, "window scale")->required();
  kernel->add_option("--v", kargs.v_path, "reflection profile CSV")->required();
  kernel->add_flag("--sandwich", kargs.sandwich, "assemble V T(h) V instead of T(h) V");
  kernel->add_option("--out", kargs.out, "kernel matrix CSV (optional)");
  kernel->add_option("--report", kargs.report, "JSON report path");

  SpecmapArgs sargs;
  auto* specmap = app.add_subcommand("specmap", "spectral mapping check on a finite representation");
  specmap->add_option("--freqs", sargs.freqs, "comma separated frequency list")->required();
  specmap->add_option("--symbol", sargs.symbol, "id|square|exp|trapezoid:a|ap1:file")->required();
  specmap->add_option("--out", sargs.out, "JSON report path");

  EnvelopeArgs eargs;
  auto* env = app.add_subcommand("envelope", "spectrum envelope for the perturbed operator");
  env->add_option("--v", eargs.v_path, "reflection profile CSV");
  env->add_option("--matrixA", eargs.matrixA, "diagonal of A, one value per row");
  env->add_option("--matrixB", eargs.matrixB, "perturbation matrix CSV (re,im pairs)");
  env->add_option("--N", eargs.N, "grid size override");
  env->add_option("--R", eargs.R, "grid half width override");
  env->add_option("--out", eargs.out, "envelope CSV path");
  env->add_option("--eigs", eargs.eigs, "eigenvalue CSV path");
  env->add_option("--report", eargs.report, "JSON report path");

  std::string vsuite = "all", vout;
  unsigned long long vseed = 12345;
  auto* verify = app.add_subcommand("verify", "run a named check suite");
  verify->add_option("--suite", vsuite, "norms|l1|kernels|specmap|similarity|envelope|all")->required();
  verify->add_option("--seed", vseed, "seed for randomized checks");
  verify->add_option("--out", vout, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (windows->parsed()) return cmd_windows(wargs);
    if (l1->parsed()) return cmd_l1bound(l1_input, l1_out);
    if (kernel->parsed()) return cmd_kernel(kargs);
    if (specmap->parsed()) return cmd_specmap(sargs);
    if (env->parsed()) return cmd_envelope(eargs);
    if (verify->parsed()) return cmd_verify(vsuite, vseed, vout);
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace specenv::cli
