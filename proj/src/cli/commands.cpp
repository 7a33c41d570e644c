#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cauchy/airfoil.hpp"
#include "cauchy/hilbert.hpp"
#include "cauchy/singularity_lab.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"

namespace cauchy::cli {

namespace {

struct RunConfig {
  std::size_t n = 256;
  bool n_given = false;
  std::optional<double> tol;
  std::string format;
  std::string out;
  std::uint64_t seed = 1;
};

Format resolve_format(const RunConfig& cfg, Format fallback) {
  if (cfg.format.empty()) return fallback;
  return cfg.format == "json" ? Format::Json : Format::Csv;
}

void emit(const Report& rep, const RunConfig& cfg, Format fallback, std::ostream& out) {
  const Format f = resolve_format(cfg, fallback);
  if (cfg.out.empty()) {
    rep.write(out, f);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::UsageError, "cannot open output file '" + cfg.out + "'");
  rep.write(file, f);
}

void add_meta(Report& rep, const RunConfig& cfg) {
  rep.meta.emplace_back("n", static_cast<long long>(cfg.n));
  rep.meta.emplace_back("seed", static_cast<long long>(cfg.seed));
  if (cfg.tol) rep.meta.emplace_back("tol", *cfg.tol);
}

// Whitespace- or comma-separated numeric rows; '#' starts a comment.
std::vector<std::vector<double>> read_rows(const std::string& path, std::size_t fields) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UsageError, "cannot open input file '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line) {
      if (ch == ',' || ch == '\t' || ch == '\r') ch = ' ';
    }
    std::istringstream ss(line);
    std::vector<double> row;
    std::string tok;
    while (ss >> tok) {
      double v = 0.0;
      const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(v)) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad number '" + tok + "'");
      }
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (row.size() != fields) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected " + std::to_string(fields) +
                                             " fields, found " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_equispaced(const std::vector<std::vector<double>>& rows) {
  const std::size_t N = rows.size();
  const double step = 2.0 * pi / static_cast<double>(N);
  for (std::size_t j = 0; j < N; ++j) {
    const double expect = rows[0][0] + step * static_cast<double>(j);
    if (std::abs(rows[j][0] - expect) > 1e-6 * step) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(j + 1) + ": angles must be equispaced over one period");
    }
  }
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw Error(ErrorCode::UsageError, "unknown suite '" + suite + "'");
  }
  SuiteConfig sc;
  sc.n = cfg.n;
  sc.tol = cfg.tol;
  sc.seed = cfg.seed;
  const std::vector<CheckRow> rows = run_suite(suite, sc);
  Report rep;
  rep.command = "verify";
  rep.meta.emplace_back("suite", suite);
  add_meta(rep, cfg);
  Table& t = rep.table("checks", {"check", "residual", "tolerance", "pass"});
  long long failed = 0;
  for (const auto& r : rows) {
    t.rows.push_back({r.id, r.residual, r.tolerance, r.pass});
    if (!r.pass) ++failed;
  }
  rep.scalars.emplace_back("checks", static_cast<long long>(rows.size()));
  rep.scalars.emplace_back("failed", failed);
  emit(rep, cfg, Format::Csv, out);
  return failed == 0 ? 0 : 1;
}

int cmd_airfoil(double U, double alpha, double rho, const RunConfig& cfg, std::ostream& out) {
  const FlowConfig flow{U, alpha, rho};
  flow.validate();
  const std::size_t n = cfg.n_given ? cfg.n : 128;
  Report rep;
  rep.command = "airfoil";
  rep.meta.emplace_back("U", U);
  rep.meta.emplace_back("alpha", alpha);
  rep.meta.emplace_back("rho", rho);
  rep.meta.emplace_back("n", static_cast<long long>(n));

  const double downwash = -U * std::sin(alpha);
  const SheetDensity gamma = finite_hilbert_inverse([downwash](double) { return downwash; }, n);
  const QuadratureGrid chord = gauss_chebyshev(n, ChebyshevWeight::FourthKind);
  Table& t = rep.table("chord", {"x", "u_plus", "u_minus", "v", "gamma", "delta_p"});
  for (const double x : chord.nodes) {
    const SurfaceVelocity up = surface_velocities(flow, x, Side::Plus);
    const SurfaceVelocity dn = surface_velocities(flow, x, Side::Minus);
    const double dp = pressure(flow, x, Side::Minus) - pressure(flow, x, Side::Plus);
    t.rows.push_back({x, up.u, dn.u, up.v, gamma(x), dp});
  }
  const CirculationRoutes routes = circulation_routes(flow, n);
  const Lift L = lift(flow, n);
  const ForceBalance fb = force_balance(flow, n);
  rep.scalars.emplace_back("circulation", routes.contour);
  rep.scalars.emplace_back("circulation_sheet", routes.sheet);
  rep.scalars.emplace_back("circulation_far_field", routes.far_field);
  rep.scalars.emplace_back("lift", L.magnitude);
  rep.scalars.emplace_back("lift_x", L.vector[0]);
  rep.scalars.emplace_back("lift_y", L.vector[1]);
  rep.scalars.emplace_back("lift_orthogonality", L.orthogonality);
  rep.scalars.emplace_back("normal_force", fb.normal_force);
  rep.scalars.emplace_back("leading_edge_suction", fb.suction);

  Table& f = rep.table("field", {"x", "y", "u", "v"});
  for (int iy = 0; iy <= 10; ++iy) {
    for (int ix = 0; ix <= 20; ++ix) {
      const double x = -2.0 + 0.2 * ix;
      const double y = -1.0 + 0.2 * iy;
      const complex z(x, std::abs(y) < 1e-12 ? 0.0 : y);
      if (z.imag() == 0.0 && std::abs(x) <= 1.0) continue;
      const complex w = alpha == 0.0 ? complex{} : flat_plate_closed_form(flow, z);
      f.rows.push_back({x, z.imag(), w.real(), -w.imag()});
    }
  }
  emit(rep, cfg, Format::Csv, out);
  return 0;
}

int cmd_probe(const std::string& path, std::optional<int> m, std::optional<int> k, const RunConfig& cfg,
              std::ostream& out) {
  if (m.has_value() != k.has_value()) throw Error(ErrorCode::UsageError, "--m and --k must be given together");
  const auto rows = read_rows(path, 3);
  if (rows.size() < 32 || rows.size() % 2 != 0) {
    throw Error(ErrorCode::UsageError, "probe needs an even number of at least 32 samples, got " + std::to_string(rows.size()));
  }
  check_equispaced(rows);
  std::vector<complex> samples;
  for (const auto& r : rows) samples.emplace_back(r[1], r[2]);
  std::optional<std::pair<int, int>> degrees;
  if (m) degrees = std::make_pair(*m, *k);
  const ProbeReport pr = probe_boundary_samples(samples, rows[0][0], degrees);
  Report rep;
  rep.command = "probe";
  rep.meta.emplace_back("input", path);
  rep.meta.emplace_back("samples", static_cast<long long>(samples.size()));
  rep.meta.emplace_back("experimental", true);
  rep.scalars.emplace_back("m", static_cast<long long>(pr.m));
  rep.scalars.emplace_back("k", static_cast<long long>(pr.k));
  rep.scalars.emplace_back("asserted", pr.asserted);
  rep.scalars.emplace_back("low_confidence", pr.low_confidence);
  rep.scalars.emplace_back("boundary_residual", pr.boundary_residual);
  rep.scalars.emplace_back("coefficient_residual", pr.coefficient_residual);
  rep.scalars.emplace_back("singular_value_ratio", pr.singular_value_ratio);
  Table& poles = rep.table("poles", {"re", "im", "modulus", "strength_re", "strength_im"});
  for (std::size_t i = 0; i < pr.locations.size(); ++i) {
    poles.rows.push_back({pr.locations[i].real(), pr.locations[i].imag(), std::abs(pr.locations[i]),
                          pr.strengths[i].real(), pr.strengths[i].imag()});
  }
  Table& scan = rep.table("scan", {"k", "boundary_residual"});
  for (const auto& [kk, r] : pr.scan) scan.rows.push_back({static_cast<long long>(kk), r});
  Table& disc = rep.table("discarded_roots", {"re", "im"});
  for (const complex r : pr.discarded_roots) disc.rows.push_back({r.real(), r.imag()});
  Table& notes = rep.table("notes", {"note"});
  for (const auto& s : pr.notes) notes.rows.push_back({s});
  Table& coeffs = rep.table("coefficients", {"n", "re", "im"});
  for (std::size_t i = 0; i < pr.coefficients.size() && i < 16; ++i) {
    coeffs.rows.push_back({static_cast<long long>(i), pr.coefficients[i].real(), pr.coefficients[i].imag()});
  }
  emit(rep, cfg, Format::Json, out);
  return 0;
}

std::function<double(double)> named_function(const std::string& name) {
  if (name == "lorentzian") return [](double x) { return -1.0 / (x * x + 1.0); };
  if (name == "lorentzian-conjugate") return [](double x) { return x / (x * x + 1.0); };
  if (name == "rational") return [](double x) { return x / (x * x * x * x + 1.0); };
  if (name == "sin") return [](double x) { return std::sin(x); };
  if (name == "cos3") return [](double x) { return std::cos(3.0 * x); };
  throw Error(ErrorCode::UsageError, "unknown function '" + name + "'");
}

double named_decay(const std::string& name) {
  if (name == "lorentzian") return 2.0;
  if (name == "lorentzian-conjugate") return 1.0;
  if (name == "rational") return 3.0;
  return 0.0;
}

std::vector<double> parse_targets(const std::string& range) {
  double a = -5.0, b = 5.0;
  long long count = 41;
  if (!range.empty()) {
    char c1 = 0, c2 = 0;
    std::istringstream ss(range);
    if (!(ss >> a >> c1 >> b >> c2 >> count) || c1 != ':' || c2 != ':' || count < 1 || !ss.eof()) {
      throw Error(ErrorCode::UsageError, "--targets expects a:b:count");
    }
  }
  std::vector<double> t;
  for (long long i = 0; i < count; ++i) t.push_back(count == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  return t;
}

int cmd_transform(const std::string& kind, const std::string& input, const std::string& function,
                  const std::string& targets, const RunConfig& cfg, std::ostream& out) {
  if (input.empty() == function.empty()) throw Error(ErrorCode::UsageError, "give exactly one of --input and --function");
  Report rep;
  rep.command = "transform";
  rep.meta.emplace_back("kind", kind);
  rep.meta.emplace_back("source", input.empty() ? function : input);
  if (kind.rfind("circular", 0) == 0) {
    PeriodicFunction v;
    if (!input.empty()) {
      const auto rows = read_rows(input, 2);
      if (rows.size() < 8 || rows.size() % 2 != 0) throw Error(ErrorCode::UsageError, "circular input needs an even number of at least 8 samples");
      check_equispaced(rows);
      for (const auto& r : rows) v.samples.push_back(r[1]);
    } else {
      v = PeriodicFunction::from(named_function(function), cfg.n);
    }
    PeriodicFunction u;
    if (kind == "circular") u = hilbert_circular(v);
    else if (kind == "circular-inverse") u = hilbert_circular_inverse(v);
    else if (kind == "circular-complementary") u = hilbert_circular_complementary(v);
    else if (kind == "circular-complementary-inverse") u = hilbert_circular_complementary_inverse(v);
    else throw Error(ErrorCode::UsageError, "unknown transform kind '" + kind + "'");
    rep.meta.emplace_back("n", static_cast<long long>(v.size()));
    rep.scalars.emplace_back("carried_mean", u.carried_mean);
    Table& t = rep.table("values", {"theta", "input", "output"});
    for (std::size_t j = 0; j < u.size(); ++j) t.rows.push_back({PeriodicFunction::angle(j, u.size()), v.samples[j], u.samples[j]});
    emit(rep, cfg, Format::Csv, out);
    return 0;
  }
  if (!input.empty()) throw Error(ErrorCode::UsageError, "line transforms take --function, not --input");
  RealLineFunction f{named_function(function), named_decay(function), 50.0, {}};
  if (function == "sin" || function == "cos3") f.period = 2.0 * pi;
  const std::vector<double> xs = parse_targets(targets);
  TransformResult r;
  if (kind == "line") r = hilbert_line(f, xs);
  else if (kind == "line-inverse") r = hilbert_line_inverse(f, xs);
  else if (kind == "line-complementary") r = hilbert_complementary(f, xs);
  else if (kind == "line-complementary-inverse") r = hilbert_complementary_inverse(f, xs);
  else throw Error(ErrorCode::UsageError, "unknown transform kind '" + kind + "'");
  rep.scalars.emplace_back("half_width", r.half_width);
  rep.scalars.emplace_back("grid_size", static_cast<long long>(r.grid_size));
  rep.scalars.emplace_back("accuracy_warning", r.accuracy_warning);
  rep.scalars.emplace_back("periodic_route", r.periodic_route);
  Table& t = rep.table("values", {"x", "value", "error_bar"});
  for (std::size_t i = 0; i < xs.size(); ++i) t.rows.push_back({xs[i], r.values[i], r.error_bar[i]});
  emit(rep, cfg, Format::Csv, out);
  return 0;
}

bool usage_code(ErrorCode c) {
  return c == ErrorCode::UsageError || c == ErrorCode::ParseError || c == ErrorCode::DomainError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cauchy-kit: Cauchy integrals, Hilbert transforms, Plemelj limits and the flat-plate airfoil"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  auto* n_opt = app.add_option("--n", cfg.n, "grid size (even, >= 8)");
  app.add_option("--tol", cfg.tol, "override every check tolerance");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_option("--seed", cfg.seed, "seed for randomized property checks");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required();

  double U = 1.0, alpha = pi / 6.0, rho = 1.0;
  auto* airfoil = app.add_subcommand("airfoil", "flat-plate airfoil tables");
  airfoil->add_option("--U", U, "free-stream speed");
  airfoil->add_option("--alpha", alpha, "incidence in radians");
  airfoil->add_option("--rho", rho, "fluid density");

  std::string probe_input;
  std::optional<int> pm, pk;
  auto* probe = app.add_subcommand("probe", "experimental pole probe from boundary samples");
  probe->add_option("input", probe_input, "rows of theta, Re f, Im f")->required();
  probe->add_option("--m", pm, "numerator degree");
  probe->add_option("--k", pk, "denominator degree");

  std::string kind, input, function, targets;
  auto* transform = app.add_subcommand("transform", "Hilbert-family transforms");
  transform->add_option("--kind", kind, "circular[-inverse|-complementary[-inverse]] or line[...]")->required();
  transform->add_option("--input", input, "rows of theta, value (circular kinds)");
  transform->add_option("--function", function, "lorentzian, lorentzian-conjugate, rational, sin, cos3");
  transform->add_option("--targets", targets, "a:b:count for line kinds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  cfg.n_given = n_opt->count() > 0;
  try {
    if (cfg.n < 8 || cfg.n % 2 != 0) throw Error(ErrorCode::UsageError, "--n must be even and at least 8");
    if (cfg.tol && !(*cfg.tol > 0.0)) throw Error(ErrorCode::UsageError, "--tol must be positive");
    if (verify->parsed()) return cmd_verify(suite, cfg, out);
    if (airfoil->parsed()) return cmd_airfoil(U, alpha, rho, cfg, out);
    if (probe->parsed()) return cmd_probe(probe_input, pm, pk, cfg, out);
    if (transform->parsed()) return cmd_transform(kind, input, function, targets, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage_code(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace cauchy::cli
