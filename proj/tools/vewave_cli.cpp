// vewave: command-line driver for viscoelastic wavefront computations.
//
// Subcommands
//   curves     attenuation / dispersion / phase-speed table over an omega grid
//   greens     Green's function field u(t, x) over a (t, x) grid
//   wavefront  wavefront report (jump criterion, amplitude routes, bounds)
//   duality    creep <-> relaxation duality solve, G(t) samples
//   verify     module invariant suite over the built-in catalog
//
// Exit codes: 0 success, 2 config error, 3 computation error,
//             4 verification failure.

#include <omp.h>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "vewave/cm_checks.hpp"
#include "vewave/csv.hpp"
#include "vewave/grid_eval.hpp"
#include "vewave/verification.hpp"
#include "vewave/wavefront_report.hpp"

namespace {

struct GridSpec {
  double min = 1e-3, max = 1e3;
  int count = 61;
  std::string spacing = "log";  // log | lin
};

struct Options {
  std::string kind = "zener";
  double rho = 1.0;
  double J0 = 1.0, J1 = 1.0, tau = 1.0;
  double c0 = 1.0, a = 1.0, alpha = 0.5, b = 1.0, A = 1.0;
  double w = 1.0, rate = 1.0;

  GridSpec omega{1e-3, 1e3, 61, "log"};
  GridSpec tgrid{0.1, 5.0, 25, "lin"};
  GridSpec xgrid{0.1, 2.0, 9, "lin"};
  GridSpec taugrid{1e-3, 1e2, 41, "log"};
  double r = 1.0;

  std::string out_dir = ".";
  std::string prefix = "vewave";
  std::string format = "csv";
  double tol = 1.0;
  int threads = 0;
};

std::vector<double> build_grid(const GridSpec& g, const std::string& name) {
  if (g.count < 1)
    throw CLI::ValidationError(name + ".count", "must be >= 1");
  if (g.count == 1) return {g.min};
  if (!(g.max > g.min))
    throw CLI::ValidationError(name, "max must exceed min");
  if (g.spacing == "log") {
    if (!(g.min > 0.0))
      throw CLI::ValidationError(name + ".min", "log spacing requires min > 0");
    return vewave::geomspace(g.min, g.max, g.count);
  }
  if (g.spacing == "lin") return vewave::linspace(g.min, g.max, g.count);
  throw CLI::ValidationError(name + ".spacing", "must be 'log' or 'lin'");
}

vewave::MaterialModel build_model(const Options& o) {
  if (o.kind == "zener") return vewave::make_zener(o.J0, o.J1, o.tau, o.rho);
  if (o.kind == "elastic") return vewave::make_elastic(o.J0, o.rho);
  if (o.kind == "powerlaw_g")
    return vewave::make_powerlaw_g(o.c0, o.a, o.alpha, o.rho);
  if (o.kind == "log_g") return vewave::make_log_g(o.c0, o.a, o.b, o.A, o.rho);
  if (o.kind == "atom_g") return vewave::make_atom_g(o.c0, o.w, o.rate, o.rho);
  throw CLI::ValidationError(
      "model.kind", "unknown kind '" + o.kind +
                        "' (zener|elastic|powerlaw_g|log_g|atom_g)");
}

std::string model_header(const Options& o, const vewave::MaterialModel& m) {
  char buf[256];
  if (o.kind == "zener" || o.kind == "elastic")
    std::snprintf(buf, sizeof buf, "%s rho=%g J0=%g J1=%g tau=%g",
                  m.label.c_str(), o.rho, o.J0, o.kind == "elastic" ? 0.0 : o.J1,
                  o.tau);
  else if (o.kind == "powerlaw_g")
    std::snprintf(buf, sizeof buf, "%s rho=%g c0=%g a=%g alpha=%g",
                  m.label.c_str(), o.rho, o.c0, o.a, o.alpha);
  else if (o.kind == "log_g")
    std::snprintf(buf, sizeof buf, "%s rho=%g c0=%g a=%g b=%g A=%g",
                  m.label.c_str(), o.rho, o.c0, o.a, o.b, o.A);
  else
    std::snprintf(buf, sizeof buf, "%s rho=%g c0=%g w=%g rate=%g",
                  m.label.c_str(), o.rho, o.c0, o.w, o.rate);
  return buf;
}

std::filesystem::path out_path(const Options& o, const std::string& suffix) {
  std::filesystem::create_directories(o.out_dir);
  return std::filesystem::path(o.out_dir) / (o.prefix + "_" + suffix);
}

void add_grid_options(CLI::App& app, const std::string& section, GridSpec& g) {
  app.add_option("--" + section + ".min", g.min);
  app.add_option("--" + section + ".max", g.max);
  app.add_option("--" + section + ".count", g.count);
  app.add_option("--" + section + ".spacing", g.spacing);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"viscoelastic wavefront toolkit"};
  app.require_subcommand(1);
  Options o;

  app.set_config("--config", "", "configuration file (INI sections)");
  app.add_option("--model.kind", o.kind, "zener|elastic|powerlaw_g|log_g|atom_g");
  app.add_option("--model.rho", o.rho);
  app.add_option("--model.J0", o.J0);
  app.add_option("--model.J1", o.J1);
  app.add_option("--model.tau", o.tau);
  app.add_option("--model.c0", o.c0);
  app.add_option("--model.a", o.a);
  app.add_option("--model.alpha", o.alpha);
  app.add_option("--model.b", o.b);
  app.add_option("--model.A", o.A);
  app.add_option("--model.w", o.w);
  app.add_option("--model.rate", o.rate);

  add_grid_options(app, "grid.omega", o.omega);
  add_grid_options(app, "grid.t", o.tgrid);
  add_grid_options(app, "grid.x", o.xgrid);
  add_grid_options(app, "grid.tau", o.taugrid);
  app.add_option("--grid.r", o.r, "observer distance for wavefront reports");

  app.add_option("--out", o.out_dir, "output directory");
  app.add_option("--prefix", o.prefix, "output file prefix");
  app.add_option("--tol", o.tol, "tolerance scale for verify");
  app.add_option("--threads", o.threads, "OpenMP thread count (0 = default)");
  app.add_option("--format", o.format, "csv|json");

  auto* curves = app.add_subcommand("curves", "attenuation-dispersion table");
  auto* greens = app.add_subcommand("greens", "Green's function field");
  auto* wavefront = app.add_subcommand("wavefront", "wavefront report");
  auto* duality = app.add_subcommand("duality", "relaxation modulus from creep");
  auto* verify = app.add_subcommand("verify", "module invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (o.threads > 0) omp_set_num_threads(o.threads);
  if (o.format != "csv" && o.format != "json") {
    std::cerr << "config error: format must be csv or json\n";
    return 2;
  }

  vewave::MaterialModel model;
  try {
    model = build_model(o);
  } catch (const CLI::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "config error: model." << o.kind << ": " << e.what() << "\n";
    return 2;
  }

  try {
    // echo the effective configuration for reproducibility / round-trips
    std::ofstream echo(out_path(o, "config.ini"));
    echo << app.config_to_str(true, false);

    if (*curves) {
      auto omegas = build_grid(o.omega, "grid.omega");
      auto table = vewave::attenuation_table(model, omegas);
      vewave::CsvWriter csv("attenuation-dispersion for " +
                            model_header(o, model));
      csv.set_columns({"omega", "attenuation", "dispersion", "phase_speed"});
      for (std::size_t i = 0; i < omegas.size(); ++i)
        csv.add_row({table.omega[i], table.attenuation[i], table.dispersion[i],
                     table.phase_speed[i]});
      csv.write(out_path(o, "curves.csv").string());
      std::cout << out_path(o, "curves.csv").string() << "\n";
    }

    if (*greens) {
      auto ts = build_grid(o.tgrid, "grid.t");
      auto xs = build_grid(o.xgrid, "grid.x");
      auto kernel = vewave::AttenuationKernel::from(model);
      auto field = vewave::greens_field(kernel, ts, xs);
      vewave::CsvWriter csv("greens field for " + model_header(o, model));
      csv.set_columns({"t", "x", "tau", "u", "flag"});
      for (std::size_t it = 0; it < ts.size(); ++it)
        for (std::size_t ix = 0; ix < xs.size(); ++ix) {
          auto idx = field.index(it, ix);
          csv.add_row({ts[it], xs[ix], field.tau[idx], field.u[idx],
                       static_cast<double>(field.flag[idx])});
        }
      csv.write(out_path(o, "greens.csv").string());
      std::cout << out_path(o, "greens.csv").string() << "\n";
    }

    if (*wavefront) {
      auto rep = vewave::make_wavefront_report(model, o.r);
      std::ofstream txt(out_path(o, "wavefront.txt"));
      txt << rep.to_text();
      std::ofstream js(out_path(o, "wavefront.json"));
      js << rep.to_json() << "\n";
      if (model.j_based()) {
        auto measure = vewave::extract_density(model);
        vewave::CsvWriter csv("spectral density for " + model_header(o, model));
        csv.set_columns({"r", "density", "quad_weight"});
        for (std::size_t j = 0; j < measure.nodes().size(); ++j)
          csv.add_row({measure.nodes()[j], measure.density()[j],
                       measure.quad_weights()[j]});
        csv.write(out_path(o, "density.csv").string());
      }
      std::cout << (o.format == "json" ? rep.to_json() + "\n" : rep.to_text());
    }

    if (*duality) {
      if (!model.j_based()) {
        std::cerr << "config error: duality requires a J-based model\n";
        return 2;
      }
      vewave::DualityOptions opts;
      auto G = vewave::solve_duality(model.creep(), opts);
      double res = vewave::duality_residual(model.creep(), G);
      vewave::CsvWriter csv("relaxation modulus for " + model_header(o, model));
      csv.set_columns({"t", "G"});
      for (std::size_t i = 0; i < G.t.size(); ++i) csv.add_row({G.t[i], G.G[i]});
      csv.write(out_path(o, "relaxation.csv").string());
      std::cout << "residual " << vewave::CsvWriter::format(res) << "\n"
                << out_path(o, "relaxation.csv").string() << "\n";
    }

    if (*verify) {
      auto sum = vewave::run_verification(o.tol);
      if (o.format == "json")
        std::cout << sum.to_json() << "\n";
      else
        std::cout << sum.to_text();
      if (!sum.all_passed()) return 4;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
