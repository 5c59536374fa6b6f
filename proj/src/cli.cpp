#include "husimi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "husimi/error.hpp"
#include "husimi/husimi.hpp"
#include "husimi/limits.hpp"
#include "husimi/report.hpp"

namespace husimi::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ModelOptions {
  std::string model = "hermite";
  int n = 0;
  std::optional<double> a;
  double g = 0.0, m0 = 1.0, omega = 1.0, hbar = 1.0;
};

void add_model_options(CLI::App* app, ModelOptions& o, bool with_n = true) {
  app->add_option("--model", o.model, "hermite or semiconfined")
      ->check(CLI::IsMember({"hermite", "semiconfined"}))
      ->capture_default_str();
  if (with_n) app->add_option("--n", o.n, "state index")->check(CLI::NonNegativeNumber)->capture_default_str();
  app->add_option("--a", o.a, "confinement parameter (semiconfined only)");
  app->add_option("--g", o.g, "field strength")->capture_default_str();
  app->add_option("--m0", o.m0, "mass")->capture_default_str();
  app->add_option("--omega", o.omega, "frequency")->capture_default_str();
  app->add_option("--hbar", o.hbar, "Planck constant")->capture_default_str();
}

ModelKind resolve(const ModelOptions& o, OscillatorParams& params) {
  params.m0 = o.m0;
  params.omega = o.omega;
  params.hbar = o.hbar;
  params.g = o.g;
  if (o.model == "hermite") {
    if (o.a && std::isfinite(*o.a)) throw DomainError("--a is only meaningful with --model semiconfined");
    params.a = kInf;
    derive(params);
    return ModelKind::Hermite;
  }
  if (!o.a || !std::isfinite(*o.a)) throw DomainError("--model semiconfined requires a finite --a");
  params.a = *o.a;
  derive(params);
  return ModelKind::Semiconfined;
}

void add_grid_options(CLI::App* app, GridSpec& g) {
  app->add_option("--x-min", g.x_min)->capture_default_str();
  app->add_option("--x-max", g.x_max)->capture_default_str();
  app->add_option("--p-min", g.p_min)->capture_default_str();
  app->add_option("--p-max", g.p_max)->capture_default_str();
  app->add_option("--x-steps", g.x_steps)->capture_default_str();
  app->add_option("--p-steps", g.p_steps)->capture_default_str();
}

void write_grid(std::ostream& os, const DistributionGrid& grid, const std::string& format) {
  if (format == "doc") report::write_grid_document(os, grid);
  else report::write_grid_csv(os, grid);
}

void write_file(const std::filesystem::path& path, const DistributionGrid& grid, const std::string& format) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DomainError("cannot open " + path.string() + " for writing");
  write_grid(os, grid, format);
  if (!os) throw DomainError("failed writing " + path.string());
}

std::string short_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

GridSpec figure_grid(double a, int steps) {
  GridSpec g;
  g.x_steps = g.p_steps = steps;
  // Uniform spacing that starts one step right of the wall and ends at 5.
  if (a < 5.0) g.x_min = -a + (5.0 + a) / steps;
  return g;
}

std::vector<oracle::VerificationReport> verification_suite(const oracle::QuadratureControl& ctl) {
  using oracle::VerificationReport;
  std::vector<VerificationReport> out;

  out.push_back(oracle::table_integral_check(1.0, 0.0, ctl, 1e-10));
  out.push_back(oracle::table_integral_check(2.5, {1.0, 0.5}, ctl, 1e-10));
  out.push_back(oracle::table_integral_check(145.0, 3.0, ctl, 1e-8));

  GridSpec cross{-4.0, 4.0, -4.0, 4.0, 11, 11};
  for (double g : {0.0, 1.0}) {
    OscillatorParams h;
    h.g = g;
    for (int n = 0; n <= 3; ++n) {
      out.push_back(oracle::closed_form_check(ModelKind::Hermite, n, h, cross, ctl, 1e-8));
      for (int m = 0; m <= n; ++m) out.push_back(oracle::orthonormality_check(ModelKind::Hermite, m, n, h, ctl));
    }
    for (double a : {0.5, 2.0}) {
      OscillatorParams s = h;
      s.a = a;
      for (int n = 0; n <= 3; ++n) {
        out.push_back(oracle::closed_form_check(ModelKind::Semiconfined, n, s, cross, ctl, 1e-8));
        for (int m = 0; m <= n; ++m)
          out.push_back(oracle::orthonormality_check(ModelKind::Semiconfined, m, n, s, ctl));
      }
    }
    OscillatorParams s12 = h;
    s12.a = 12.0;
    for (int n = 0; n <= 1; ++n)
      out.push_back(oracle::closed_form_check(ModelKind::Semiconfined, n, s12, cross, ctl, 1e-6));
  }

  for (double g : {0.0, 1.0})
    for (int n = 0; n <= 1; ++n) {
      OscillatorParams h;
      h.g = g;
      out.push_back(oracle::normalization_check(ModelKind::Hermite, n, h, ctl));
      for (double a : {0.5, 2.0, 12.0}) {
        OscillatorParams s = h;
        s.a = a;
        out.push_back(oracle::normalization_check(ModelKind::Semiconfined, n, s, ctl));
      }
    }

  {
    VerificationReport r;
    r.name = "limits/reduction_g0";
    const PhasePoint pts[] = {{0.0, 0.0}, {1.2, -0.4}, {-0.3, 2.1}, {2.5, 0.7}};
    for (double a : {0.5, 1.0, 2.0, 12.0})
      for (int n = 0; n <= 3; ++n)
        for (const auto& pt : pts) {
          if (pt.x <= -a) continue;
          OscillatorParams s;
          s.a = a;
          r.max_rel_error = std::max(r.max_rel_error, limits::reduction_check_g0(n, pt, s));
          ++r.points_tested;
        }
    r.pass = r.max_rel_error <= 1e-12;
    r.notes = "tol=1e-12";
    out.push_back(r);
  }
  const GridSpec limit_grid{-3.0, 3.0, -3.0, 3.0, 21, 21};
  const std::vector<double> a_values{2.0, 4.0, 8.0, 12.0};
  for (int n = 0; n <= 1; ++n)
    for (double g : {0.0, 1.0}) {
      const double threshold = n == 0 && g == 0.0 ? 0.02 : kInf;
      out.push_back(report::series_report(
          "limits/hermite_limit/n=" + std::to_string(n) + ",g=" + short_number(g),
          limits::hermite_limit_check(n, g, a_values, limit_grid), threshold));
    }
  for (int n = 1; n <= 3; ++n)
    out.push_back(report::series_report("limits/laguerre_to_hermite/n=" + std::to_string(n) + ",x=0.5",
                                        limits::laguerre_to_hermite_check(n, 0.5, {1e2, 1e3, 1e4}), kInf));

  report::sort_by_name(out);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Husimi distributions of the ordinary and semiconfined oscillators", "husimi-cli"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HUSIMI_VERSION);

  ModelOptions eval_opts;
  double x = 0.0, p = 0.0;
  auto* eval = app.add_subcommand("eval", "evaluate W at one phase-space point");
  add_model_options(eval, eval_opts);
  eval->add_option("--x", x)->capture_default_str();
  eval->add_option("--p", p)->capture_default_str();

  ModelOptions grid_opts;
  GridSpec grid_spec;
  std::string grid_format = "csv", grid_out;
  auto* grid = app.add_subcommand("grid", "evaluate W on a rectangular grid");
  add_model_options(grid, grid_opts);
  add_grid_options(grid, grid_spec);
  grid->add_option("--format", grid_format)->check(CLI::IsMember({"csv", "doc"}))->capture_default_str();
  grid->add_option("--out", grid_out, "output file (default stdout)");

  oracle::QuadratureControl ctl;
  std::string verify_format = "csv", verify_out;
  auto* verify = app.add_subcommand("verify", "run the oracle and limit checks");
  verify->add_option("--tol", ctl.rel_tol, "oracle quadrature relative tolerance")->capture_default_str();
  verify->add_option("--format", verify_format, "csv: one line per check; doc: JSON")
      ->check(CLI::IsMember({"csv", "doc"}))
      ->capture_default_str();
  verify->add_option("--out", verify_out, "output file (default stdout)");

  std::string fig_dir, fig_format = "csv";
  int fig_steps = 201;
  auto* figures = app.add_subcommand("figures", "write the twelve figure grids");
  figures->add_option("--out", fig_dir, "output directory")->required();
  figures->add_option("--format", fig_format)->check(CLI::IsMember({"csv", "doc"}))->capture_default_str();
  figures->add_option("--steps", fig_steps, "points per axis")->check(CLI::Range(2, 100000))->capture_default_str();

  ModelOptions spec_opts;
  int n_max = 10;
  auto* spectrum = app.add_subcommand("spectrum", "list energy levels 0..n-max");
  add_model_options(spectrum, spec_opts, false);
  spectrum->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*eval) {
      OscillatorParams params;
      const ModelKind kind = resolve(eval_opts, params);
      const DerivedParams dp = derive(params);
      out << report::format_number(husimi_value(kind, eval_opts.n, {x, p}, params, dp)) << '\n';
      return kSuccess;
    }
    if (*grid) {
      OscillatorParams params;
      const ModelKind kind = resolve(grid_opts, params);
      const DistributionGrid g = husimi_grid(kind, grid_opts.n, grid_spec, params);
      if (grid_out.empty()) write_grid(out, g, grid_format);
      else write_file(grid_out, g, grid_format);
      return kSuccess;
    }
    if (*verify) {
      ctl.validate();
      const auto reports = verification_suite(ctl);
      std::ostringstream text;
      if (verify_format == "doc") report::write_document(text, reports);
      else report::write_text(text, reports);
      if (verify_out.empty()) {
        out << text.str();
      } else {
        std::ofstream os(verify_out, std::ios::binary);
        if (!os) throw DomainError("cannot open " + verify_out + " for writing");
        os << text.str();
      }
      const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
      return all ? kSuccess : kCheckFailed;
    }
    if (*figures) {
      std::filesystem::create_directories(fig_dir);
      const std::string ext = fig_format == "doc" ? ".json" : ".csv";
      for (int n : {0, 1})
        for (double a : {0.5, 2.0, 12.0})
          for (double g : {0.0, 1.0}) {
            OscillatorParams params;
            params.a = a;
            params.g = g;
            const DistributionGrid w = husimi_grid(ModelKind::Semiconfined, n, figure_grid(a, fig_steps), params);
            const std::string name = "husimi_n" + std::to_string(n) + "_a" + short_number(a) + "_g" +
                                     short_number(g) + ext;
            write_file(std::filesystem::path(fig_dir) / name, w, fig_format);
            out << name << '\n';
          }
      return kSuccess;
    }
    if (*spectrum) {
      OscillatorParams params;
      const ModelKind kind = resolve(spec_opts, params);
      out << "n,energy\n";
      for (int n = 0; n <= n_max; ++n) {
        const double e = kind == ModelKind::Hermite ? energy_hermite(n, params) : energy_semiconfined(n, params);
        out << n << ',' << report::format_number(e) << '\n';
      }
      return kSuccess;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const AccuracyError& e) {
    err << "accuracy failure: " << e.what() << " (residual " << e.residual() << ")\n";
    return kCheckFailed;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace husimi::cli
