#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <acidzeta/acidzeta.hpp>

namespace az = acidzeta;

namespace {

az::cplx parse_s(const std::string& text) {
  const char* p = text.c_str();
  char* end = nullptr;
  const double re = std::strtod(p, &end);
  if (end == p) throw az::ParseError("cannot parse evaluation point: " + text);
  if (*end == '\0') return {re, 0.0};
  char* end2 = nullptr;
  const double im = std::strtod(end, &end2);
  if (end2 == end || *end2 != 'i' || *(end2 + 1) != '\0')
    throw az::ParseError("cannot parse evaluation point '" + text +
                         "' (expected forms like 1.5 or 1.5-0.5i)");
  return {re, im};
}

az::ZeroSet load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw az::ParseError("cannot open zero file: " + path);
  return az::parse_zero_file(in);
}

void emit(const az::ReportEnvelope& env, const std::string& format) {
  if (format == "json")
    env.write_json(std::cout);
  else if (format == "csv")
    env.write_csv(std::cout);
  else
    throw az::ParseError("unknown format: " + format);
}

struct Options {
  std::string zero_file = "data/zeta_zeros_1e4.txt";
  std::string format = "json";
  std::string variant = "audited";
  az::PrecisionConfig cfg;
};

void add_precision_flags(CLI::App* cmd, az::PrecisionConfig& cfg) {
  cmd->add_option("--quad-tol", cfg.quad_tol, "quadrature tolerance");
  cmd->add_option("--em-terms", cfg.em_terms, "direct terms in the zeta engine");
  cmd->add_option("--em-bernoulli", cfg.em_bernoulli, "Bernoulli pairs in the zeta engine");
  cmd->add_option("--series-max", cfg.series_max, "cap on prime-power series length");
}

az::Variant parse_variant(const std::string& v) {
  if (v == "literal") return az::Variant::literal;
  if (v == "audited") return az::Variant::audited;
  throw az::ParseError("unknown variant: " + v);
}

int run(CLI::App& app, CLI::App* zeros, CLI::App* zc, CLI::App* zi, CLI::App* zn,
        CLI::App* eval, CLI::App* verify, CLI::App* scan, Options& opt, double t_max,
        double step, const std::string& out_path, const std::string& import_path,
        const std::string& function, const std::string& method,
        const std::vector<std::string>& s_list, const std::string& tail_name, double contour_r,
        double contour_x_max, double c1, double s1_upper, const std::string& suite,
        std::uint64_t seed, double scan_sigma, double scan_t_min, double scan_t_max,
        int scan_steps, const std::string& scan_format) {
  az::validate(opt.cfg);

  if (app.got_subcommand(zeros)) {
    if (zeros->got_subcommand(zc)) {
      const auto zs = az::compute_zeros(t_max, opt.cfg, step);
      char cert[96];
      std::snprintf(cert, sizeof cert, "certified %zu zeros below %s", zs.entries.size(),
                    az::fmt12(t_max).c_str());
      if (out_path.empty() || out_path == "-") {
        az::serialize(zs, std::cout, cert);
      } else {
        std::ofstream out(out_path);
        if (!out) throw az::ParseError("cannot open output file: " + out_path);
        az::serialize(zs, out, cert);
      }
      std::cerr << cert << "\n";
      return 0;
    }
    if (zeros->got_subcommand(zi)) {
      const auto zs = load_zeros(import_path);
      std::cout << "count " << zs.size() << "\n"
                << "t_max " << az::fmt12(zs.t_max) << "\n"
                << "source " << az::source_name(zs.source) << "\n";
      return 0;
    }
    if (zeros->got_subcommand(zn)) {
      const auto zs = load_zeros(opt.zero_file);
      std::cout << "count " << zs.size() << "\n"
                << "t_max " << az::fmt12(zs.t_max) << "\n"
                << "source " << az::source_name(zs.source) << "\n";
      return 0;
    }
    throw az::ParseError("zeros requires a subcommand");
  }

  if (app.got_subcommand(eval)) {
    const az::Variant variant = parse_variant(opt.variant);
    az::TailPolicy tail;
    if (tail_name == "main-term")
      tail.mode = az::TailMode::main_term;
    else if (tail_name != "none")
      throw az::ParseError("unknown tail policy: " + tail_name);
    az::ContourSpec contour;
    contour.r = contour_r;
    contour.x_max = contour_x_max;
    az::HalfExplicitParams hep;
    hep.c1 = c1;
    hep.s1_upper = s1_upper;
    hep.variant = variant;

    const bool needs_zeros = method == "zero-sum" || method == "half-explicit";
    az::ZeroSet zs;
    if (needs_zeros) zs = load_zeros(opt.zero_file);

    az::ReportEnvelope env;
    env.command = "eval";
    env.inputs["function"] = function;
    env.inputs["method"] = method;
    env.inputs["variant"] = opt.variant;
    env.inputs["tail"] = tail_name;
    if (needs_zeros) {
      env.inputs["zero_file"] = opt.zero_file;
      env.inputs["zero_count"] = std::uint64_t(zs.size());
    }
    env.inputs["quad_tol"] = az::report_num(opt.cfg.quad_tol);
    double max_err = 0.0;
    for (const auto& stxt : s_list) {
      const az::cplx s = parse_s(stxt);
      az::EvalResult r;
      if (function == "acid") {
        if (method == "zero-sum")
          r = az::zero_sum(s, zs, tail);
        else if (method == "mellin")
          r = az::mellin_rep(s, opt.cfg);
        else if (method == "explicit")
          r = az::explicit_formula(s, contour, variant, opt.cfg);
        else
          throw az::ParseError("method " + method + " does not apply to the acid function");
      } else if (function == "adjoint") {
        if (method == "zero-sum")
          r = az::zero_sum_adjoint(s, zs, tail);
        else if (method == "half-explicit")
          r = az::half_explicit(s, zs, hep, opt.cfg);
        else
          throw az::ParseError("method " + method + " does not apply to the adjoint function");
      } else {
        throw az::ParseError("unknown function: " + function);
      }
      az::ojson row;
      row["s_re"] = az::report_num(s.real());
      row["s_im"] = az::report_num(s.imag());
      row["value_re"] = az::report_num(r.value.real());
      row["value_im"] = az::report_num(r.value.imag());
      row["err"] = az::report_num(r.err);
      row["method"] = az::method_name(r.method);
      env.rows.push_back(row);
      max_err = std::max(max_err, r.err);
    }
    env.error_budget["max_err"] = az::report_num(max_err);
    emit(env, opt.format);
    return 0;
  }

  if (app.got_subcommand(verify)) {
    const auto rep = az::run_suite(suite, seed, opt.cfg);
    az::ReportEnvelope env;
    env.command = "verify";
    env.inputs["suite"] = suite;
    env.inputs["seed"] = seed;
    env.inputs["quad_tol"] = az::report_num(opt.cfg.quad_tol);
    int failed = 0;
    for (const auto& rec : rep.records) {
      env.rows.push_back(az::to_json(rec));
      if (!rec.pass) ++failed;
    }
    env.error_budget["rows"] = std::uint64_t(rep.records.size());
    env.error_budget["failed_rows"] = failed;
    env.error_budget["printed_divergence"] = rep.divergence;
    emit(env, opt.format);
    return az::report_exit(rep);
  }

  if (app.got_subcommand(scan)) {
    std::vector<double> grid;
    for (int i = 0; i < scan_steps; ++i)
      grid.push_back(scan_steps == 1
                         ? scan_t_min
                         : scan_t_min + (scan_t_max - scan_t_min) * i / (scan_steps - 1));
    const auto zs = load_zeros(opt.zero_file);
    const auto rep = az::growth_scan(scan_sigma, grid, zs, {}, opt.cfg);
    if (scan_format == "csv") {
      std::cout << "t,abs_term1,abs_term2,abs_term3,abs_literal,abs_zero_sum,err_terms,"
                   "err_zero_sum\n";
      for (const auto& row : rep.rows)
        std::cout << az::fmt12(row.t) << "," << az::fmt12(row.abs_term1) << ","
                  << az::fmt12(row.abs_term2) << "," << az::fmt12(row.abs_term3) << ","
                  << az::fmt12(row.abs_literal) << "," << az::fmt12(row.abs_zero_sum) << ","
                  << az::fmt12(row.err_terms) << "," << az::fmt12(row.err_zero_sum) << "\n";
      std::cout << "# slope_term1 " << az::fmt12(rep.slope_term1) << "\n";
      std::cout << "# zero_sum_bound " << az::fmt12(rep.zero_sum_bound) << "\n";
      return 0;
    }
    az::ReportEnvelope env;
    env.command = "scan";
    env.inputs["sigma"] = az::report_num(scan_sigma);
    env.inputs["zero_file"] = opt.zero_file;
    for (const auto& row : rep.rows) {
      az::ojson j;
      j["t"] = az::report_num(row.t);
      j["abs_term1"] = az::report_num(row.abs_term1);
      j["abs_term2"] = az::report_num(row.abs_term2);
      j["abs_term3"] = az::report_num(row.abs_term3);
      j["abs_literal"] = az::report_num(row.abs_literal);
      j["abs_zero_sum"] = az::report_num(row.abs_zero_sum);
      j["err_terms"] = az::report_num(row.err_terms);
      j["err_zero_sum"] = az::report_num(row.err_zero_sum);
      env.rows.push_back(j);
    }
    env.error_budget["slope_term1"] = az::report_num(rep.slope_term1);
    env.error_budget["zero_sum_bound"] = az::report_num(rep.zero_sum_bound);
    emit(env, scan_format);
    return 0;
  }

  throw az::ParseError("no command given");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerics for the acid zeta function and its adjoint"};
  app.require_subcommand(1);
  Options opt;

  auto* zeros = app.add_subcommand("zeros", "compute or inspect tables of zeta zeros");
  zeros->require_subcommand(1);
  auto* zc = zeros->add_subcommand("compute", "locate ordinates on the half line");
  double t_max = 100.0, step = 0.06;
  std::string out_path = "-";
  zc->add_option("--t-max", t_max, "scan up to this height")->required();
  zc->add_option("--step", step, "initial scan step");
  zc->add_option("--out", out_path, "output file, - for stdout");
  add_precision_flags(zc, opt.cfg);
  auto* zi = zeros->add_subcommand("import", "parse and validate a zero file");
  std::string import_path;
  zi->add_option("--file", import_path, "file to import")->required();
  auto* zn = zeros->add_subcommand("info", "summarize the configured zero file");
  zn->add_option("--zero-file", opt.zero_file, "zero table");

  auto* eval = app.add_subcommand("eval", "evaluate the acid or adjoint function");
  std::string function = "acid", method = "zero-sum", tail_name = "none";
  std::vector<std::string> s_list;
  double contour_r = 0.25, contour_x_max = 60.0, c1 = 0.0, s1_upper = 0.0;
  eval->add_option("--function", function, "acid or adjoint");
  eval->add_option("--method", method, "zero-sum, mellin, explicit or half-explicit")
      ->required();
  eval->add_option("--s", s_list, "evaluation points, e.g. 1.5 or 1.5+0.5i")->required();
  eval->add_option("--variant", opt.variant, "literal or audited");
  eval->add_option("--tail", tail_name, "none or main-term");
  eval->add_option("--zero-file", opt.zero_file, "zero table");
  eval->add_option("--contour-r", contour_r, "semicircle radius");
  eval->add_option("--contour-x-max", contour_x_max, "contour truncation");
  eval->add_option("--c1", c1, "integration constant of the S1 antiderivative");
  eval->add_option("--s1-upper", s1_upper, "transform cutoff, 0 for table top");
  eval->add_option("--format", opt.format, "json or csv");
  add_precision_flags(eval, opt.cfg);

  auto* verify = app.add_subcommand("verify", "run a cross-check suite");
  std::string suite;
  std::uint64_t seed = 0;
  verify
      ->add_option("--suite", suite,
                   "appendix, lemma3, theorem1, formula-c, theorem4, theorem5, "
                   "corollary6 or all")
      ->required();
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--format", opt.format, "json or csv");
  add_precision_flags(verify, opt.cfg);

  auto* scan = app.add_subcommand("scan", "tabulate term growth on a vertical line");
  double scan_sigma = 1.5, scan_t_min = 10.0, scan_t_max = 30.0;
  std::string scan_format = "csv";
  int scan_steps = 0;
  scan->add_option("--sigma", scan_sigma, "real part of the line")->required();
  scan->add_option("--t-min", scan_t_min, "lowest ordinate")->required();
  scan->add_option("--t-max", scan_t_max, "highest ordinate")->required();
  scan->add_option("--steps", scan_steps, "number of grid points")->required();
  scan->add_option("--zero-file", opt.zero_file, "zero table");
  scan->add_option("--format", scan_format, "json or csv");
  add_precision_flags(scan, opt.cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return run(app, zeros, zc, zi, zn, eval, verify, scan, opt, t_max, step, out_path,
               import_path, function, method, s_list, tail_name, contour_r, contour_x_max, c1,
               s1_upper, suite, seed, scan_sigma, scan_t_min, scan_t_max, scan_steps,
               scan_format);
  } catch (const az::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const az::InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const az::AzError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 4;
  }
}
