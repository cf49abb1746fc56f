// Command-line front end: point evaluation, tables, the verification suite,
// and the four-panel weighted residual/bound figure with CSV/SVG output.
//
// Exit codes: 0 success, 2 usage or domain error, 3 numerical
// non-convergence, 4 bound violation.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ggf/asymptotics.hpp"
#include "ggf/ggf.hpp"
#include "ggf/verify.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

using ggf::format_double;

// shortest round-trip form for filenames, labels and console text
std::string fmt_short(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct CommonConfig {
  std::string out_dir;
  double series_rel_tol = 1e-15;
  int series_max_terms = 10000;
  double quad_abs_tol = 1e-12;
  double quad_rel_tol = 1e-10;
  std::uint64_t seed = 0x5eed5eed5eedULL;
};

ggf::SeriesPolicy series_policy(const CommonConfig& c) {
  ggf::SeriesPolicy p;
  p.rel_tol = c.series_rel_tol;
  p.max_terms = c.series_max_terms;
  return p;
}

ggf::QuadSpec quad_spec(const CommonConfig& c) {
  ggf::QuadSpec q;
  q.abs_tol = c.quad_abs_tol;
  q.rel_tol = c.quad_rel_tol;
  return q;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// parses "p/q" or a plain real multiple of pi
double parse_theta_frac(const std::string& frac) {
  auto slash = frac.find('/');
  if (slash == std::string::npos) return std::stod(frac) * kPi;
  double p = std::stod(frac.substr(0, slash));
  double q = std::stod(frac.substr(slash + 1));
  return p / q * kPi;
}

// ---------------------------------------------------------------------------
// self-contained SVG polyline plot
// ---------------------------------------------------------------------------

struct Curve {
  std::string label;
  std::string color;
  const std::vector<double>* x;
  const std::vector<double>* y;
};

std::string svg_plot(const std::string& title, const std::string& x_label,
                     const std::string& y_label, const std::vector<Curve>& curves,
                     bool log_y) {
  const double width = 960, height = 600;
  const double ml = 86, mr = 24, mt = 46, mb = 58;
  double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
  for (const Curve& c : curves) {
    for (double v : *c.x) { x_min = std::min(x_min, v); x_max = std::max(x_max, v); }
    for (double v : *c.y) {
      if (log_y && v <= 0.0) continue;
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  if (!(x_max > x_min)) x_max = x_min + 1.0;
  if (!(y_max > y_min)) y_max = y_min + 1.0;
  if (log_y) {
    y_min = std::log10(std::max(y_min, 1e-18));
    y_max = std::log10(y_max);
    if (y_max - y_min > 18.0) y_min = y_max - 18.0;
  } else {
    double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;
  }
  auto sx = [&](double v) { return ml + (v - x_min) / (x_max - x_min) * (width - ml - mr); };
  auto sy = [&](double v) {
    if (log_y) v = std::log10(std::max(v, std::pow(10.0, y_min)));
    return height - mb - (v - y_min) / (y_max - y_min) * (height - mt - mb);
  };
  char buf[512];
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"600\" "
       "viewBox=\"0 0 960 600\">\n";
  s += "<rect width=\"960\" height=\"600\" fill=\"white\"/>\n";
  // frame
  std::snprintf(buf, sizeof buf,
                "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                "fill=\"none\" stroke=\"black\"/>\n",
                ml, mt, width - ml - mr, height - mt - mb);
  s += buf;
  // ticks
  for (int i = 0; i <= 6; ++i) {
    double xv = x_min + (x_max - x_min) * i / 6.0;
    double px = sx(xv);
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  px, height - mb, px, height - mb + 6);
    s += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"14\" text-anchor=\"middle\">%.3g</text>\n",
                  px, height - mb + 22, xv);
    s += buf;
  }
  for (int i = 0; i <= 5; ++i) {
    double yv = y_min + (y_max - y_min) * i / 5.0;
    double py = height - mb - (height - mt - mb) * i / 5.0;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  ml - 6, py, ml, py);
    s += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"14\" text-anchor=\"end\">%s%.4g</text>\n",
                  ml - 10, py + 5, log_y ? "1e" : "", log_y ? yv : yv);
    s += buf;
  }
  // labels and title
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.1f\" y=\"24\" font-size=\"17\" text-anchor=\"middle\">%s</text>\n",
                width / 2, title.c_str());
  s += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"15\" text-anchor=\"middle\">%s</text>\n",
                width / 2, height - 14.0, x_label.c_str());
  s += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"20\" y=\"%.1f\" font-size=\"15\" text-anchor=\"middle\" "
                "transform=\"rotate(-90 20 %.1f)\">%s</text>\n",
                height / 2, height / 2, y_label.c_str());
  s += buf;
  // curves + legend
  double ly = mt + 18;
  for (const Curve& c : curves) {
    s += "<polyline fill=\"none\" stroke=\"" + c.color + "\" stroke-width=\"1.4\" points=\"";
    for (std::size_t i = 0; i < c.x->size(); ++i) {
      double yv = (*c.y)[i];
      if (log_y && yv <= 0.0) continue;
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", sx((*c.x)[i]), sy(yv));
      s += buf;
    }
    s += "\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"%s\" "
                  "stroke-width=\"2\"/><text x=\"%.1f\" y=\"%.1f\" font-size=\"14\">%s</text>\n",
                  width - mr - 190.0, ly, width - mr - 160.0, ly, c.color.c_str(),
                  width - mr - 152.0, ly + 5, c.label.c_str());
    s += buf;
    ly += 20;
  }
  s += "</svg>\n";
  return s;
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_eval(const CommonConfig& cfg, double lambda, double nu, double theta,
             bool left) {
  ggf::GgfParams params{lambda, nu, left ? ggf::Side::Left : ggf::Side::Right};
  ggf::AnglePoint pt(theta);
  ggf::SeriesPolicy pol = series_policy(cfg);
  double value = ggf::eval(params, pt, pol);
  std::cout << "value    " << format_double(value) << "\n";
  bool decomposable = lambda > 0.0 && nu > 0.0 &&
                      (lambda <= 2.0 ? nu + lambda > 1.0 : nu > lambda - 3.0) &&
                      !left;
  if (decomposable) {
    ggf::AsymptoticDecomposition d = ggf::weighted_pair(lambda, nu, pt, pol);
    std::cout << "leading  " << format_double(d.leading) << "\n";
    std::cout << "residual " << format_double(d.residual) << "\n";
    std::cout << "bound_S  " << format_double(d.bound_S) << "\n";
    std::cout << "weighted_residual " << format_double(d.weighted_residual) << "\n";
    std::cout << "weighted_bound    " << format_double(d.weighted_bound) << "\n";
    std::cout << "case     " << (d.case_tag == ggf::CaseTag::CaseI ? "i" : "ii") << "\n";
  } else {
    std::cout << "(asymptotic decomposition needs the right-side function with "
                 "lambda > 0 and the case preconditions)\n";
  }
  return 0;
}

int cmd_table(const CommonConfig& cfg, double lambda, double nu, int grid,
              const std::string& format, std::string out_path) {
  ggf::SeriesPolicy pol = series_policy(cfg);
  std::vector<double> thetas, values;
  for (int k = 1; k < grid - 1; ++k) thetas.push_back(kPi * k / (grid - 1));
  for (double th : thetas)
    values.push_back(ggf::eval({lambda, nu, ggf::Side::Right}, ggf::AnglePoint(th), pol));
  if (format == "text") {
    for (std::size_t i = 0; i < thetas.size(); ++i)
      std::cout << format_double(thetas[i]) << "  " << format_double(values[i]) << "\n";
    return 0;
  }
  if (out_path.empty())
    out_path = (std::filesystem::path(cfg.out_dir.empty() ? "." : cfg.out_dir) /
                ("table." + format))
                   .string();
  if (format == "csv") {
    std::string csv = "theta,value\n";
    for (std::size_t i = 0; i < thetas.size(); ++i)
      csv += format_double(thetas[i]) + "," + format_double(values[i]) + "\n";
    write_file(out_path, csv);
  } else if (format == "svg") {
    std::vector<Curve> curves{{"G", "#1f77b4", &thetas, &values}};
    write_file(out_path, svg_plot("G(cos theta), lambda=" + fmt_short(lambda) +
                                      ", nu=" + fmt_short(nu),
                                  "theta", "G", curves, false));
  } else {
    std::cerr << "table: unsupported format " << format << "\n";
    return 2;
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_figure1(const CommonConfig& cfg, std::vector<double> lambdas, double nu,
                int grid, bool log_y) {
  if (lambdas.empty()) lambdas = {0.7, 1.6, 2.3, 3.1};
  if (grid < 2) {
    std::cerr << "figure1: grid must be at least 2\n";
    return 2;
  }
  ggf::SeriesPolicy pol = series_policy(cfg);
  std::filesystem::path dir(cfg.out_dir.empty() ? "." : cfg.out_dir);
  std::filesystem::create_directories(dir);
  bool violated = false;
  for (double lam : lambdas) {
    std::vector<double> thetas(grid), resid(grid), bound(grid);
    std::string csv = "theta,abs_weighted_residual,weighted_bound\n";
    for (int k = 0; k < grid; ++k) {
      double th = kPi * k / (grid - 1);
      ggf::AsymptoticDecomposition d = ggf::weighted_pair(lam, nu, ggf::AnglePoint(th), pol);
      thetas[k] = th;
      resid[k] = std::fabs(d.weighted_residual);
      bound[k] = d.weighted_bound;
      csv += format_double(th) + "," + format_double(resid[k]) + "," +
             format_double(bound[k]) + "\n";
      if (resid[k] > bound[k] * (1.0 + 1e-9) + 1e-12) {
        violated = true;
        std::cerr << "bound violation at lambda=" << fmt_short(lam)
                  << " theta=" << fmt_short(th) << "\n";
      }
    }
    std::string stem = "fig1_lambda_" + fmt_short(lam);
    write_file((dir / (stem + ".csv")).string(), csv);
    std::vector<Curve> curves{{"|weighted residual|", "#d62728", &thetas, &resid},
                              {"weighted bound", "#1f77b4", &thetas, &bound}};
    write_file((dir / (stem + ".svg")).string(),
               svg_plot("lambda=" + fmt_short(lam) + ", nu=" + fmt_short(nu),
                        "theta", log_y ? "log10 value" : "value", curves, log_y));
    std::cout << "panel lambda=" << fmt_short(lam) << ": " << grid
              << " rows, wrote " << (dir / stem).string() << ".{csv,svg}\n";
  }
  if (violated) {
    std::cout << "FAIL: weighted bound violated\n";
    return 4;
  }
  std::cout << "PASS: |weighted residual| <= weighted bound on all rows\n";
  return 0;
}

int cmd_check(const CommonConfig& cfg, const std::string& only, double tolerance,
              int random_points, bool write_reports) {
  ggf::CheckOptions opts;
  opts.policy = series_policy(cfg);
  opts.quad = quad_spec(cfg);
  opts.seed = cfg.seed;
  opts.random_points = random_points;
  if (tolerance > 0.0) {
    opts.tolerance_scale = tolerance;
    opts.tolerance_overridden = true;
  }
  std::vector<std::string> names = only.empty()
                                       ? ggf::check_names()
                                       : std::vector<std::string>{only};
  std::filesystem::path dir(cfg.out_dir.empty() ? "reports" : cfg.out_dir);
  if (write_reports) std::filesystem::create_directories(dir);
  bool all_pass = true;
  std::cout << "check            points      worst margin   verdict\n";
  std::cout << "---------------  ----------  -------------  -------\n";
  for (const std::string& name : names) {
    ggf::SweepReport rep = ggf::run_check_by_name(name, opts);
    if (write_reports) {
      std::string csv_path = (dir / (name + ".csv")).string();
      write_file(csv_path, ggf::report_to_csv(rep));
      rep.details_path = csv_path;
      write_file((dir / (name + ".json")).string(), ggf::report_to_json(rep));
    }
    all_pass = all_pass && rep.passed;
    char line[128];
    std::snprintf(line, sizeof line, "%-15s  %10ld  %13.4e  %s\n", rep.check_name.c_str(),
                  rep.points_tested, rep.worst_margin, rep.passed ? "pass" : "FAIL");
    std::cout << line;
  }
  std::cout << (all_pass ? "PASS: all checks hold\n" : "FAIL: at least one check failed\n");
  return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Gegenbauer functions of fractional degree: "
               "evaluation, asymptotic decompositions, and bound verification"};
  app.set_config("--config", "", "key=value configuration file");
  app.fallthrough();

  CommonConfig cfg;
  if (const char* env = std::getenv("GGF_OUTPUT_DIR")) cfg.out_dir = env;
  app.add_option("--out-dir", cfg.out_dir, "output directory for generated files")
      ->envname("GGF_OUTPUT_DIR");
  app.add_option("--series-rel-tol", cfg.series_rel_tol, "series truncation tolerance");
  app.add_option("--series-max-terms", cfg.series_max_terms, "series term cap");
  app.add_option("--quad-abs-tol", cfg.quad_abs_tol, "quadrature absolute tolerance");
  app.add_option("--quad-rel-tol", cfg.quad_rel_tol, "quadrature relative tolerance");
  app.add_option("--seed", cfg.seed, "seed for the random-point supplements");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate at one point");
  double lambda = 0.5, nu = 0.0, theta = -1.0;
  std::string theta_frac;
  bool left = false;
  eval_cmd->add_option("--lambda", lambda, "parameter lambda > -1/2")->required();
  eval_cmd->add_option("--nu", nu, "fractional degree nu >= 0")->required();
  auto* topt = eval_cmd->add_option("--theta", theta, "angle in [0, pi]");
  eval_cmd->add_option("--theta-frac", theta_frac, "angle as a fraction of pi, e.g. 1/3")
      ->excludes(topt);
  eval_cmd->add_flag("--left", left, "evaluate the left-side function");

  // table
  auto* table_cmd = app.add_subcommand("table", "tabulate over a theta grid");
  double t_lambda = 0.5, t_nu = 2.5;
  int t_grid = 101;
  std::string t_format = "text", t_out;
  table_cmd->add_option("--lambda", t_lambda)->required();
  table_cmd->add_option("--nu", t_nu)->required();
  table_cmd->add_option("--grid", t_grid, "number of grid points");
  table_cmd->add_option("--format", t_format)->check(CLI::IsMember({"text", "csv", "svg"}));
  table_cmd->add_option("--out", t_out, "output file path");

  // figure1
  auto* fig_cmd = app.add_subcommand(
      "figure1", "weighted residual vs bound panels with CSV + SVG output");
  std::vector<double> f_lambdas;
  double f_nu = 20.3;
  int f_grid = 2001;
  bool f_logy = false;
  fig_cmd->add_option("--lambdas", f_lambdas, "panel lambda values");
  fig_cmd->add_option("--nu", f_nu, "degree");
  fig_cmd->add_option("--grid", f_grid, "rows per panel");
  fig_cmd->add_flag("--log-y", f_logy, "logarithmic value axis");

  // check / identities
  auto* check_cmd = app.add_subcommand("check", "run the verification suites");
  std::string c_only;
  double c_tolerance = -1.0;
  int c_random = 1000;
  bool c_write = false;
  check_cmd->add_option("--only", c_only, "run a single named check")
      ->check(CLI::IsMember(ggf::check_names()));
  check_cmd->add_option("--tolerance", c_tolerance,
                        "override the violation tolerance scale");
  check_cmd->add_option("--random-points", c_random, "random supplement size per check");
  check_cmd->add_flag("--write-reports", c_write, "write CSV/JSON reports");
  auto* ident_cmd = app.add_subcommand("identities", "run the identity cross-checks");
  double i_tolerance = -1.0;
  int i_random = 1000;
  bool i_write = false;
  ident_cmd->add_option("--tolerance", i_tolerance, "override the tolerance scale");
  ident_cmd->add_option("--random-points", i_random, "random supplement size");
  ident_cmd->add_flag("--write-reports", i_write, "write CSV/JSON reports");

  app.require_subcommand(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed()) {
      if (!theta_frac.empty()) theta = parse_theta_frac(theta_frac);
      if (theta < 0.0) {
        std::cerr << "eval: provide --theta or --theta-frac\n";
        return 2;
      }
      return cmd_eval(cfg, lambda, nu, theta, left);
    }
    if (table_cmd->parsed()) return cmd_table(cfg, t_lambda, t_nu, t_grid, t_format, t_out);
    if (fig_cmd->parsed()) return cmd_figure1(cfg, f_lambdas, f_nu, f_grid, f_logy);
    if (check_cmd->parsed())
      return cmd_check(cfg, c_only, c_tolerance, c_random, c_write);
    if (ident_cmd->parsed())
      return cmd_check(cfg, "identities", i_tolerance, i_random, i_write);
  } catch (const ggf::ConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
