#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "yamabe/constants.hpp"
#include "yamabe/errors.hpp"
#include "yamabe/optimizer.hpp"

namespace yamabe::cli {
namespace {

using nlohmann::ordered_json;
using nlohmann::json;

std::string dump(const json& document) { return document.dump(2) + "\n"; }

std::string surgery_label(const ModelSpaceParams& p) {
  return fmt::format("({},{})", p.n(), p.k());
}

std::string space_label(const ModelSpaceParams& p) { return fmt::format("({},{})", p.v(), p.w()); }

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') {
      quoted += '"';
    }
    quoted += ch;
  }
  return quoted + "\"";
}

std::string full(double value) { return fmt::format("{:.12g}", value); }

std::string truncated(double value, int decimals) {
  return fmt::format("{:.{}f}", round_down(value, decimals), decimals);
}

json bound_json(const BoundResult& result) {
  return {{"formula", std::string(to_string(result.formula))},
          {"minimizer_c", canonical(result.minimizer_c)},
          {"ratio", canonical(result.ratio)},
          {"tolerance", canonical(result.tolerance)},
          {"value", canonical(result.value)}};
}

void write_atomically(const std::string& payload, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << payload;
    out.flush();
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path temporary = target;
  temporary += ".tmp";
  {
    std::ofstream file(temporary, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw DomainError("cannot write " + temporary.string());
    }
    file << payload;
    if (!file) {
      throw DomainError("write failed for " + temporary.string());
    }
  }
  std::filesystem::rename(temporary, target);
}

struct CommonOptions {
  std::string format = "text";
  std::string out;
  std::string registry;
  double tolerance = MinimizationConfig{}.refine_tolerance;
  int grid_points = MinimizationConfig{}.grid_points;

  ConstantRegistry load_registry() const {
    return registry.empty() ? ConstantRegistry::defaults() : ConstantRegistry::from_file(registry);
  }

  MinimizationConfig config() const {
    MinimizationConfig c;
    c.refine_tolerance = tolerance;
    c.grid_points = grid_points;
    c.validate();
    return c;
  }
};

void add_common(CLI::App& command, CommonOptions& options, bool with_minimization) {
  command.add_option("--format", options.format, "Output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  command.add_option("--out", options.out, "Write output to this file instead of stdout");
  if (with_minimization) {
    command.add_option("--registry", options.registry,
                       "JSON constant registry replacing the compiled-in defaults");
    command.add_option("--tol", options.tolerance, "Golden-section bracket width on c");
    command.add_option("--grid", options.grid_points, "Number of grid points on [0,1]");
  }
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

double canonical(double value) {
  if (!std::isfinite(value) || value == 0.0) {
    return value;
  }
  return std::stod(fmt::format("{:.12g}", value));
}

std::string render_bound(const BoundResult& result, const ModelSpaceParams& params,
                         const GammaInput& gamma, OutputFormat format) {
  const double mu1 = sphere_yamabe(params.n());
  switch (format) {
    case OutputFormat::Json: {
      json document = bound_json(result);
      document["v"] = params.v();
      document["w"] = params.w();
      document["n"] = params.n();
      document["k"] = params.k();
      document["gamma"] = canonical(gamma.gamma);
      document["gamma_source"] = gamma.source;
      document["mu1"] = canonical(mu1);
      return dump(document);
    }
    case OutputFormat::Csv:
      return fmt::format(
          "v,w,n,k,formula,gamma,value,ratio,minimizer_c,tolerance,mu1,gamma_source\n"
          "{},{},{},{},{},{},{},{},{},{},{},{}\n",
          params.v(), params.w(), params.n(), params.k(), to_string(result.formula),
          full(gamma.gamma), full(result.value), full(result.ratio), full(result.minimizer_c),
          full(result.tolerance), full(mu1), csv_field(gamma.source));
    case OutputFormat::Text:
      break;
  }
  return fmt::format(
      "(v,w) = {}   (n,k) = {}\n"
      "formula      {}\n"
      "gamma        {}   [{}]\n"
      "lower bound  {}   (rounded down: {})\n"
      "ratio        {}   (value / mu(S^{}))\n"
      "minimizer c  {}   (tolerance {:.1e})\n"
      "mu(S^{})      {}\n",
      space_label(params), surgery_label(params), to_string(result.formula), full(gamma.gamma),
      gamma.source, full(result.value), truncated(result.value, 1), full(result.ratio), params.n(),
      full(result.minimizer_c), result.tolerance, params.n(), full(mu1));
}

std::string render_table1(const std::vector<Table1Row>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json document = json::array();
    for (const auto& row : rows) {
      document.push_back({{"v", row.params.v()},
                          {"w", row.params.w()},
                          {"n", row.params.n()},
                          {"k", row.params.k()},
                          {"gamma", canonical(row.gamma.gamma)},
                          {"gamma_source", row.gamma.source},
                          {"numeric_gamma", canonical(row.numeric_gamma)},
                          {"analytic", bound_json(row.analytic)},
                          {"analytic_reported", canonical(row.analytic_reported)},
                          {"numeric", bound_json(row.numeric)},
                          {"mu1", canonical(row.mu1)},
                          {"reduction", row.reduction_note}});
    }
    return dump(document);
  }
  std::string text;
  if (format == OutputFormat::Csv) {
    text =
        "v,w,n,k,gamma,analytic,numeric,mu1,analytic_formula,analytic_exact,numeric_exact,"
        "numeric_gamma,numeric_minimizer_c,gamma_source\n";
    for (const auto& row : rows) {
      text += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", row.params.v(),
                          row.params.w(), row.params.n(), row.params.k(), full(row.gamma.gamma),
                          truncated(row.analytic_reported, 1), truncated(row.numeric.value, 1),
                          fmt::format("{:.2f}", row.mu1), to_string(row.analytic.formula),
                          full(row.analytic.value), full(row.numeric.value),
                          full(row.numeric_gamma), full(row.numeric.minimizer_c),
                          csv_field(row.gamma.source));
    }
    return text;
  }
  text = "Lambda_{n,k} lower bounds, rounded down (mu1 to two decimals)\n\n";
  text += fmt::format("{:<8} {:<8} {:<9} {:>9} {:>9} {:>13}\n", "(v,w)", "(n,k)", "mu0/mu1",
                      "Analytic", "Numeric", "mu1=mu(S^n)");
  for (const auto& row : rows) {
    text += fmt::format("{:<8} {:<8} {:<9} {:>9} {:>9} {:>13.2f}\n", space_label(row.params),
                        surgery_label(row.params), fmt::format("{:g}", row.gamma.gamma),
                        truncated(row.analytic_reported, 1), truncated(row.numeric.value, 1),
                        row.mu1);
  }
  text += "\n";
  for (const auto& row : rows) {
    text += fmt::format(
        "{}: analytic = {} (ratio {}, c = {}); numeric = general bound with gamma = {} "
        "(ratio {}, c = {}); gamma: {}\n",
        space_label(row.params), to_string(row.analytic.formula), full(row.analytic.ratio),
        full(row.analytic.minimizer_c), fmt::format("{:g}", row.numeric_gamma),
        full(row.numeric.ratio), full(row.numeric.minimizer_c), row.gamma.source);
  }
  return text;
}

std::string render_table_tn(const std::vector<TnRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json document = json::array();
    for (const auto& row : rows) {
      document.push_back({{"n", row.n},
                          {"status", std::string(to_string(row.status))},
                          {"t_n", row.t_n ? json(canonical(*row.t_n)) : json(nullptr)},
                          {"sigma_sphere", canonical(row.sphere_sigma)},
                          {"source", row.source}});
    }
    return dump(document);
  }
  if (format == OutputFormat::Csv) {
    std::string text = "n,t_n,status,sigma_sphere,t_n_exact,sigma_sphere_exact,source\n";
    for (const auto& row : rows) {
      text += fmt::format("{},{},{},{},{},{},{}\n", row.n,
                          row.t_n ? truncated(*row.t_n, 1) : "?", to_string(row.status),
                          truncated(row.sphere_sigma, 1), row.t_n ? full(*row.t_n) : "",
                          full(row.sphere_sigma), csv_field(row.source));
    }
    return text;
  }
  std::string header = fmt::format("{:<22}", "n =");
  std::string bounds = fmt::format("{:<22}", "sigma(M) >= t_n =");
  std::string spheres = fmt::format("{:<22}", "sigma(S^n) =");
  for (const auto& row : rows) {
    header += fmt::format("{:>7}", row.n);
    bounds += fmt::format("{:>7}", row.t_n ? truncated(*row.t_n, 1) : "?");
    spheres += fmt::format("{:>7}", truncated(row.sphere_sigma, 1));
  }
  std::string text = "t_n: sigma(M) bounds for 2-connected M with vanishing index\n\n";
  text += header + "\n" + bounds + "\n" + spheres + "\n\n";
  for (const auto& row : rows) {
    text += fmt::format("n = {:<3} {:<9} {}\n", row.n, to_string(row.status), row.source);
  }
  return text;
}

std::string render_sigma(const std::vector<SigmaBound>& bounds, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json document = json::array();
    for (const auto& bound : bounds) {
      json ingredients = json::array();
      for (const auto& ingredient : bound.ingredients) {
        json item = {{"name", ingredient.name},
                     {"value", canonical(ingredient.value)},
                     {"provenance", ingredient.provenance}};
        if (ingredient.bound) {
          item["bound"] = bound_json(*ingredient.bound);
        }
        ingredients.push_back(std::move(item));
      }
      document.push_back({{"dimension", bound.dimension},
                          {"hypothesis", std::string(to_string(bound.hypothesis))},
                          {"value", canonical(bound.value)},
                          {"strict", bound.strict},
                          {"upper", canonical(bound.upper)},
                          {"caveat", bound.caveat},
                          {"caveat_note", bound.caveat_note},
                          {"ingredients", std::move(ingredients)}});
    }
    return dump(document);
  }
  if (format == OutputFormat::Csv) {
    std::string text = "dimension,hypothesis,relation,value,value_exact,upper,caveat,binding\n";
    for (const auto& bound : bounds) {
      std::string binding;
      for (const auto& ingredient : bound.ingredients) {
        if (ingredient.value == bound.value) {
          binding = ingredient.name;
          break;
        }
      }
      text += fmt::format("{},{},{},{},{},{},{},{}\n", bound.dimension,
                          csv_field(to_string(bound.hypothesis)), bound.strict ? ">" : ">=",
                          truncated(bound.value, 1), full(bound.value), full(bound.upper),
                          bound.caveat ? "yes" : "no", csv_field(binding));
    }
    return text;
  }
  std::string text;
  for (const auto& bound : bounds) {
    text += fmt::format("{}: sigma(M) {} {}   [sigma(M) <= mu(S^{}) = {}]\n",
                        to_string(bound.hypothesis), bound.strict ? ">" : ">=",
                        truncated(bound.value, 1), bound.dimension, full(bound.upper));
    for (const auto& ingredient : bound.ingredients) {
      text += fmt::format("    {:<40} {:>14}  {}\n", ingredient.name, full(ingredient.value),
                          ingredient.provenance);
    }
    if (bound.caveat) {
      text += "    caveat: " + bound.caveat_note + "\n";
    }
  }
  return text;
}

std::string render_squeeze(const SqueezeMap& map, const SqueezeEvaluation& e,
                           OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return dump({{"v", map.v()},
                   {"c", canonical(map.c())},
                   {"r", canonical(e.r)},
                   {"f", canonical(e.f_of_r)},
                   {"f_prime", canonical(e.f_prime)},
                   {"quad_error", canonical(e.quad_error)}});
    case OutputFormat::Csv:
      return fmt::format("v,c,r,f,f_prime,quad_error\n{},{},{},{},{},{}\n", map.v(),
                         full(map.c()), full(e.r), full(e.f_of_r), full(e.f_prime),
                         full(e.quad_error));
    case OutputFormat::Text:
      break;
  }
  return fmt::format(
      "radial squeezing map R^{0} -> H^{0}_c, c = {1}\n"
      "r          {2}\n"
      "f(r)       {3}\n"
      "f'(r)      {4}\n"
      "quad error {5:.3e}\n",
      map.v(), full(map.c()), full(e.r), full(e.f_of_r), full(e.f_prime), e.quad_error);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower bounds for conformal Yamabe constants of H^v_c x S^w and surgery constants",
               "yamabe"};
  app.require_subcommand(1);

  CommonOptions bound_options;
  int bound_v = 0;
  int bound_w = 0;
  std::optional<double> bound_gamma;
  std::string bound_formula = "general";
  auto* bound = app.add_subcommand("bound", "Minimize a lower bound for mu_c over c in [0,1]");
  bound->add_option("--v", bound_v, "Dimension of the hyperbolic factor")->required();
  bound->add_option("--w", bound_w, "Dimension of the sphere factor")->required();
  bound->add_option("--gamma", bound_gamma, "Lower bound for mu_0/mu_1 (default: registry)");
  bound->add_option("--formula", bound_formula,
                    "homothety, curvature-comparison, general, general-refined, relaxed-closed-form, "
                    "equal-dimension or combined");
  add_common(*bound, bound_options, true);

  CommonOptions table_options;
  std::string which;
  auto* table = app.add_subcommand("table", "Emit a result table");
  table->add_option("which", which, "table1, tn or sigma")
      ->required()
      ->check(CLI::IsMember({"table1", "tn", "sigma"}));
  add_common(*table, table_options, true);

  CommonOptions squeeze_options;
  int squeeze_v = 0;
  double squeeze_c = 0.0;
  double squeeze_r = 0.0;
  auto* squeeze = app.add_subcommand("squeeze", "Evaluate the radial squeezing map at r");
  squeeze->add_option("--v", squeeze_v, "Dimension of the hyperbolic factor (>= 2)")->required();
  squeeze->add_option("--c", squeeze_c, "Curvature scale in (0,1]")->required();
  squeeze->add_option("--r", squeeze_r, "Euclidean radius (>= 0)")->required();
  add_common(*squeeze, squeeze_options, false);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& arg : args) {
    argv.push_back(arg.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (bound->parsed()) {
      const ModelSpaceParams params(bound_v, bound_w);
      if (bound_v < 2 || bound_w < 2) {
        throw DomainError("bound: need v >= 2 and w >= 2");
      }
      const ConstantRegistry registry = bound_options.load_registry();
      const GammaInput gamma = bound_gamma ? GammaInput{params, *bound_gamma, "command line"}
                                           : effective_gamma(params, registry);
      const BoundFormula formula = bound_formula_from_string(bound_formula);
      const BoundResult result =
          minimize_bound(params, gamma.gamma, formula, bound_options.config());
      write_atomically(render_bound(result, params, gamma, parse_format(bound_options.format)),
                       bound_options.out, out);
    } else if (table->parsed()) {
      const ConstantRegistry registry = table_options.load_registry();
      const MinimizationConfig config = table_options.config();
      const OutputFormat format = parse_format(table_options.format);
      std::string payload;
      if (which == "table1") {
        payload = render_table1(build_table1(registry, config), format);
      } else if (which == "tn") {
        payload = render_table_tn(build_table_tn(registry, config), format);
      } else {
        auto [nine, ten] = sigma_bound_dim9_10(registry, config);
        payload = render_sigma({sigma_bound_dim5(registry, config),
                                sigma_bound_dim6(registry, config), std::move(nine), std::move(ten)},
                               format);
      }
      write_atomically(payload, table_options.out, out);
    } else if (squeeze->parsed()) {
      if (!(squeeze_c > 0.0)) {
        throw DomainError("squeeze: c must lie in (0,1]");
      }
      const SqueezeMap map(squeeze_v, squeeze_c);
      const OutputFormat format = parse_format(squeeze_options.format);
      write_atomically(render_squeeze(map, map.evaluate(squeeze_r), format),
                       squeeze_options.out, out);
    }
  } catch (const MissingConstantError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMissingConstant;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "error: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace yamabe::cli
