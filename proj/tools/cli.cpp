#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include "gha/errors.hpp"
#include "gha/hartree.hpp"
#include "gha/hipt.hpp"
#include "gha/oracle_diag.hpp"
#include "gha/qft.hpp"
#include "gha/reports.hpp"
#include "gha/vacuum.hpp"
#include "output.hpp"

namespace gha::cli {
namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  std::string format = "md";
  bool no_meta = false;
  std::optional<double> tol;
};

struct ModelOptions {
  int power = 4;
  double g = 1.0;
  double lambda = 1.0;
};

/// Result of a subcommand: the document to print and the exit status.
struct Outcome {
  Document doc;
  int status = 0;
};

void add_common(CLI::App& app, CommonOptions& common) {
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  app.add_flag("--no-meta", common.no_meta, "Omit the meta block (version, timestamp)");
}

void add_model(CLI::App& app, ModelOptions& model, double default_g) {
  model.g = default_g;
  app.add_option("--power", model.power, "Anharmonic power")
      ->check(CLI::IsMember({4, 6, 8}))
      ->capture_default_str();
  app.add_option("--g", model.g, "Coefficient of phi^2/2")->capture_default_str();
  app.add_option("--lambda", model.lambda, "Coupling")->capture_default_str();
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return Format::Markdown;
}

Json model_fields(const ModelOptions& m) {
  Json fields;
  fields["power"] = m.power;
  fields["g"] = m.g;
  fields["lambda"] = m.lambda;
  return fields;
}

Outcome run_spectrum(const ModelOptions& m, const std::vector<std::uint32_t>& levels, int order,
                     bool strict_paper, bool shifted) {
  const OscillatorModel model(m.power, m.g, m.lambda);
  const double shift = shifted ? m.g * m.g / (16.0 * m.lambda) : 0.0;
  Outcome result;
  result.doc.fields = model_fields(m);
  result.doc.fields["order"] = order;
  if (shifted) result.doc.fields["reporting_shift"] = shift;
  Section section{"levels", {"n", "phase", "omega", "sigma", "e0"}, {}};
  if (shifted) section.columns.push_back("e0_reported");
  if (order == 2) {
    section.columns.push_back("delta_e2");
    section.columns.push_back("e2");
    if (shifted) section.columns.push_back("e2_reported");
  }
  for (const std::uint32_t n : levels) {
    const HartreeSolution sol = solve_level(model, n);
    std::vector<Json> row{n, std::string(to_string(sol.phase)), sol.omega, sol.sigma, sol.energy};
    if (shifted) row.emplace_back(sol.energy + shift);
    if (order == 2) {
      const PerturbationReport pt = second_order(model, n, {strict_paper});
      row.emplace_back(pt.delta_e2);
      row.emplace_back(pt.e2);
      if (shifted) row.emplace_back(pt.e2 + shift);
    }
    section.rows.push_back(std::move(row));
  }
  result.doc.sections.push_back(std::move(section));
  return result;
}

Outcome run_dwo(const ModelOptions& m, const std::vector<std::uint32_t>& levels, int order,
                bool strict_paper) {
  Outcome result = run_spectrum(m, levels, order, strict_paper, true);
  const OscillatorModel model(m.power, m.g, m.lambda);
  Section branches{"branches", {"n", "xi", "lambda_c", "phase", "omega", "sigma", "energy"}, {}};
  for (const std::uint32_t n : levels) {
    const HartreeSolution sol = solve_level(model, n);
    const double lambda_c = m.power == 4 ? critical_coupling(sol.xi, m.g) : std::nan("");
    for (const Branch& b : sol.branches) {
      branches.rows.push_back({n, sol.xi, lambda_c, std::string(to_string(b.phase)), b.omega,
                               b.sigma, b.energy});
    }
  }
  result.doc.sections.push_back(std::move(branches));
  return result;
}

Outcome run_hipt(const ModelOptions& m, std::uint32_t n, bool strict_paper) {
  const OscillatorModel model(m.power, m.g, m.lambda);
  const PerturbationReport pt = second_order(model, n, {strict_paper});
  Outcome result;
  result.doc.fields = model_fields(m);
  result.doc.fields["n"] = n;
  result.doc.fields["strict_paper"] = strict_paper;
  result.doc.fields["e0"] = pt.e0;
  result.doc.fields["first_order"] = pt.first_order;
  result.doc.fields["delta_e2"] = pt.delta_e2;
  result.doc.fields["e2"] = pt.e2;
  Section terms{"contributions", {"m", "numerator", "denominator", "term"}, {}};
  for (const auto& c : pt.contributions) {
    terms.rows.push_back({c.m, c.numerator, c.denominator, c.numerator * c.numerator / c.denominator});
  }
  result.doc.sections.push_back(std::move(terms));
  return result;
}

Outcome run_oracle(const ModelOptions& m, std::uint32_t n_max, double tol,
                   std::optional<double> basis_frequency, std::size_t max_dimension) {
  const OscillatorModel model(m.power, m.g, m.lambda);
  OracleOptions options;
  options.basis_frequency = basis_frequency;
  options.max_dimension = max_dimension;
  const SpectrumEstimate est = converged_levels(model, n_max, tol, options);
  Outcome result;
  result.doc.fields = model_fields(m);
  result.doc.fields["tol"] = tol;
  result.doc.fields["dimension_used"] = est.dimension_used;
  result.doc.fields["basis_frequency"] = est.basis_frequency;
  Section levels{"levels", {"n", "energy", "convergence_error"}, {}};
  for (std::size_t i = 0; i < est.levels.size(); ++i) {
    levels.rows.push_back({i, est.levels[i], est.convergence_error[i]});
  }
  result.doc.sections.push_back(std::move(levels));
  return result;
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i) {
    out[i] = points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return out;
}

std::vector<double> logspace(double lo, double hi, std::size_t points) {
  std::vector<double> out = linspace(std::log(lo), std::log(hi), points);
  for (double& x : out) x = std::exp(x);
  return out;
}

Json report_summary(const ComparisonReport& report) {
  Json summary;
  summary["rows"] = report.summary.rows;
  summary["failures"] = report.summary.failures;
  summary["disputed"] = report.summary.disputed;
  summary["max_rel_error"] = report.summary.max_rel_error;
  summary["pass"] = report.ok();
  return summary;
}

Outcome run_table_command(int id, bool compare, std::optional<double> tol) {
  const ReferenceTable& table = reference_table(id);
  const bool beta = table.coupling_name == "beta";
  Outcome result;
  result.doc.fields["table"] = id;
  result.doc.fields["caption"] = std::string(table.caption);
  if (!compare) {
    Section cells{"rows", {"lambda", "n", "provenance", "reference", "disputed", "note"}, {}};
    if (beta) cells.columns.insert(cells.columns.begin(), "beta");
    for (const auto& c : table.cells) {
      std::vector<Json> row{beta ? c.coupling / 2.0 : c.coupling, c.n,
                            std::string(to_string(c.provenance)), c.value(), c.disputed,
                            std::string(c.note)};
      if (beta) row.insert(row.begin(), c.coupling);
      cells.rows.push_back(std::move(row));
    }
    result.doc.sections.push_back(std::move(cells));
    return result;
  }
  TableOptions options;
  if (tol) options.tolerances = Tolerances::uniform(*tol);
  const ComparisonReport report = run_table(id, options);
  Section rows{"rows",
               {"lambda", "n", "provenance", "computed", "reference", "rel_error", "tolerance",
                "pass", "disputed", "note"},
               {}};
  if (beta) rows.columns.insert(rows.columns.begin(), "beta");
  for (const auto& r : report.rows) {
    std::vector<Json> row{beta ? r.coupling / 2.0 : r.coupling, r.n,
                          std::string(to_string(r.provenance)), r.computed, r.reference,
                          r.rel_error, r.tolerance, r.pass, r.disputed, std::string(r.note)};
    if (beta) row.insert(row.begin(), r.coupling);
    rows.rows.push_back(std::move(row));
  }
  result.doc.sections.push_back(std::move(rows));
  if (!report.percent_errors.empty()) {
    Section pct{"percent_errors", {"beta", "n", "printed", "recomputed"}, {}};
    for (const auto& p : report.percent_errors) {
      pct.rows.push_back({p.coupling, p.n, p.printed, p.recomputed});
    }
    result.doc.sections.push_back(std::move(pct));
  }
  result.doc.fields["summary"] = report_summary(report);
  result.status = report.ok() ? 0 : 1;
  return result;
}

struct QftOptions {
  double mass2 = 1.0;
  double lambda = 0.1;
  double cutoff = 10.0;
  double sigma = 0.0;
  double from = 0.0;
  double to = 1.0;
  std::size_t points = 21;
};

Json theory_fields(const qft::FieldTheory& t) {
  Json fields;
  fields["mass2"] = t.m2;
  fields["lambda"] = t.lambda;
  fields["cutoff"] = t.cutoff;
  return fields;
}

Outcome run_qft(const std::string& action, const QftOptions& o) {
  const qft::FieldTheory theory{o.mass2, o.lambda, o.cutoff};
  Outcome result;
  result.doc.fields = theory_fields(theory);
  result.doc.fields["action"] = action;
  if (action == "gap") {
    const qft::GapState s = qft::solve_mass_gap(theory, o.sigma);
    result.doc.fields["sigma"] = s.sigma;
    result.doc.fields["M2"] = s.M2;
    result.doc.fields["i0"] = s.i0;
    result.doc.fields["i1"] = s.i1;
    result.doc.fields["im1"] = s.im1;
    result.doc.fields["residual"] = s.residual;
  } else if (action == "branches") {
    Section rows{"branches", {"sigma", "M2", "physical"}, {}};
    for (const auto& b : qft::vev_branches(theory)) rows.rows.push_back({b.sigma, b.M2, b.physical});
    result.doc.sections.push_back(std::move(rows));
  } else if (action == "potential") {
    const double u0 = qft::effective_potential(theory, 0.0);
    Section rows{"potential", {"sigma", "M2", "U", "U_minus_U0"}, {}};
    for (const double s : linspace(o.from, o.to, o.points)) {
      const double u = qft::effective_potential(theory, s);
      rows.rows.push_back({s, qft::solve_mass_gap(theory, s).M2, u, u - u0});
    }
    result.doc.sections.push_back(std::move(rows));
  } else if (action == "renorm") {
    const qft::RenormalizedParams r = qft::renormalized(theory);
    result.doc.fields["M2_bar"] = qft::solve_mass_gap(theory, 0.0).M2;
    result.doc.fields["mR2"] = r.mR2;
    result.doc.fields["lambdaR"] = r.lambdaR;
    result.doc.fields["lambdaR_over_lambda"] = o.lambda > 0.0 ? Json(r.lambdaR / o.lambda) : Json(nullptr);
  } else if (action == "structure") {
    const double M2 = qft::solve_mass_gap(theory, 0.0).M2;
    const double mR2 = qft::renormalized(theory).mR2;
    result.doc.fields["M2_bar"] = M2;
    result.doc.fields["peak_density"] = qft::peak_density(o.mass2, mR2);
    Section rows{"structure", {"k", "u", "density_ratio", "pair_occupation"}, {}};
    for (const double k : linspace(o.from, o.to, o.points)) {
      rows.rows.push_back({k, qft::structure_function(k, o.mass2, M2), qft::density_ratio(k, mR2),
                           qft::pair_occupation(k, o.mass2, M2)});
    }
    result.doc.sections.push_back(std::move(rows));
  } else {
    const double mR = std::sqrt(qft::renormalized(theory).mR2);
    result.doc.fields["mR"] = mR;
    Section rows{"static", {"r", "r_mR", "U"}, {}};
    for (const double r : linspace(o.from, o.to, o.points)) {
      rows.rows.push_back({r, r * mR, qft::static_potential(r, mR)});
    }
    result.doc.sections.push_back(std::move(rows));
  }
  return result;
}

Outcome run_vacuum(std::optional<double> omega, const ModelOptions& m, std::uint32_t n,
                   bool scaling, double from, double to, std::size_t points) {
  Outcome result;
  if (scaling) {
    const OscillatorModel model(m.power, m.g, m.lambda);
    const std::vector<double> lambdas = logspace(from, to, points);
    const auto samples = strong_coupling_scaling(model, lambdas, n);
    result.doc.fields["n"] = n;
    result.doc.fields["slope"] = log_log_slope(samples);
    Section rows{"samples", {"lambda", "n0"}, {}};
    for (const auto& s : samples) rows.rows.push_back({s.lambda, s.n0});
    result.doc.sections.push_back(std::move(rows));
    return result;
  }
  double w = 0.0;
  if (omega) {
    w = *omega;
  } else {
    const OscillatorModel model(m.power, m.g, m.lambda);
    result.doc.fields = model_fields(m);
    result.doc.fields["n"] = n;
    w = solve_level(model, n).omega;
  }
  const VacuumStructure v = vacuum_structure(w);
  result.doc.fields["omega"] = w;
  result.doc.fields["alpha"] = v.alpha;
  result.doc.fields["n0"] = v.n0;
  result.doc.fields["u"] = v.u;
  return result;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Hartree approximation toolkit", "gha"};
  app.require_subcommand(1);
  CommonOptions common;
  std::function<Outcome()> action;

  ModelOptions model;
  std::vector<std::uint32_t> levels{0};
  int order = 0;
  bool strict_paper = false;

  auto* spectrum = app.add_subcommand("spectrum", "Zeroth- and second-order levels");
  add_common(*spectrum, common);
  add_model(*spectrum, model, 1.0);
  spectrum->add_option("--levels", levels, "Comma-separated level indices")->delimiter(',');
  spectrum->add_option("--order", order, "Perturbative order")->check(CLI::IsMember({0, 2}));
  spectrum->add_flag("--strict-paper", strict_paper, "Even couplings only in the second-order sum");
  spectrum->callback([&] { action = [&] { return run_spectrum(model, levels, order, strict_paper, false); }; });

  ModelOptions dwo_model;
  auto* dwo = app.add_subcommand("dwo", "Double-well levels with phase selection");
  add_common(*dwo, common);
  add_model(*dwo, dwo_model, -1.0);
  dwo->add_option("--levels", levels, "Comma-separated level indices")->delimiter(',');
  dwo->add_option("--order", order, "Perturbative order")->check(CLI::IsMember({0, 2}));
  dwo->add_flag("--strict-paper", strict_paper, "Even couplings only in the second-order sum");
  dwo->callback([&] { action = [&] { return run_dwo(dwo_model, levels, order, strict_paper); }; });

  std::uint32_t level = 0;
  auto* hipt = app.add_subcommand("hipt", "Second-order correction with its terms");
  add_common(*hipt, common);
  add_model(*hipt, model, 1.0);
  hipt->add_option("--level,-n", level, "Level index")->capture_default_str();
  hipt->add_flag("--strict-paper", strict_paper, "Even couplings only");
  hipt->callback([&] { action = [&] { return run_hipt(model, level, strict_paper); }; });

  std::uint32_t n_max = 0;
  std::optional<double> basis_frequency;
  std::size_t max_dimension = 4096;
  auto* oracle = app.add_subcommand("oracle", "Exact diagonalization in a truncated basis");
  add_common(*oracle, common);
  add_model(*oracle, model, 1.0);
  oracle->add_option("--tol", common.tol, "Relative convergence target (default 1e-9)");
  oracle->add_option("--n-max", n_max, "Highest level reported")->capture_default_str();
  oracle->add_option("--basis-frequency", basis_frequency, "Basis frequency");
  oracle->add_option("--max-dimension", max_dimension, "Largest basis")->capture_default_str();
  oracle->callback([&] {
    action = [&] { return run_oracle(model, n_max, common.tol.value_or(1e-9), basis_frequency, max_dimension); };
  });

  std::optional<double> omega;
  bool scaling = false;
  double from = 1e3;
  double to = 1e5;
  std::size_t points = 21;
  auto* vacuum = app.add_subcommand("vacuum", "Vacuum structure of a Hartree level");
  add_common(*vacuum, common);
  add_model(*vacuum, model, 1.0);
  vacuum->add_option("--omega", omega, "Use this frequency instead of solving");
  vacuum->add_option("--level,-n", level, "Level index")->capture_default_str();
  vacuum->add_flag("--scaling", scaling, "Sweep lambda logarithmically and fit the n0 slope");
  vacuum->add_option("--from", from, "Smallest coupling of the sweep")->capture_default_str();
  vacuum->add_option("--to", to, "Largest coupling of the sweep")->capture_default_str();
  vacuum->add_option("--points", points, "Samples in the sweep")->check(CLI::Range(2, 100000));
  vacuum->callback([&] { action = [&] { return run_vacuum(omega, model, level, scaling, from, to, points); }; });

  std::string qft_action;
  QftOptions qft_opts;
  auto* qft = app.add_subcommand("qft", "Gaussian effective potential of lambda phi^4");
  add_common(*qft, common);
  qft->add_option("action", qft_action, "gap | branches | potential | renorm | structure | static")
      ->required()
      ->check(CLI::IsMember({"gap", "branches", "potential", "renorm", "structure", "static"}));
  qft->add_option("--mass2", qft_opts.mass2, "Bare mass squared")->capture_default_str();
  qft->add_option("--lambda", qft_opts.lambda, "Bare coupling")->capture_default_str();
  qft->add_option("--cutoff", qft_opts.cutoff, "Momentum cutoff")->capture_default_str();
  qft->add_option("--sigma", qft_opts.sigma, "Condensate (gap)")->capture_default_str();
  qft->add_option("--from", qft_opts.from, "Grid start (potential: sigma, structure: k, static: r)");
  qft->add_option("--to", qft_opts.to, "Grid end");
  qft->add_option("--points", qft_opts.points, "Grid points")->check(CLI::Range(1, 100000));
  qft->callback([&] {
    action = [&] {
      if (qft_action == "static" && qft_opts.from <= 0.0) qft_opts.from = 0.1;
      return run_qft(qft_action, qft_opts);
    };
  });

  int table_id = 1;
  bool compare = false;
  auto* table = app.add_subcommand("table", "Reference tables and their regression");
  add_common(*table, common);
  table->add_option("id", table_id, "Table number")->required()->check(CLI::Range(1, 4));
  table->add_flag("--compare", compare, "Recompute every cell and compare");
  table->add_option("--tol", common.tol, "Uniform relative tolerance override");
  table->callback([&] { action = [&] { return run_table_command(table_id, compare, common.tol); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return 2;
  }

  try {
    Outcome result = action();
    out << render(result.doc, parse_format(common.format), !common.no_meta);
    return result.status;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gha::cli
