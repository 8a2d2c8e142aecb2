#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qhilb/qhilb.hpp"

namespace qhilb::cli {

namespace {

struct CommandOptions {
  std::vector<int> alphas;
  std::vector<int> betas;
};

void add_common(CLI::App* sub, RunConfig& config) {
  sub->add_option("--order", config.order, "inclusive truncation order N (t^0..t^N)")
      ->capture_default_str();
  sub->add_option("--format", config.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"tsv", Format::tsv}, {"tree", Format::tree}}))
      ->capture_default_str();
  sub->add_option("--output", config.output_path, "write the report to this file");
}

}  // namespace

ParseOutcome parse_args(std::vector<std::string> args) {
  RunConfig config;
  CommandOptions opts;

  CLI::App app{"Exact series identities for quasihomogeneous Hilbert schemes of points", "qhilb"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify-identity",
                                    "diagram sum of q^h(Y) t^|Y| against the product formula");
  verify->add_option("--alpha", opts.alphas, "alpha weight(s)")->required()->expected(1, -1);
  verify->add_option("--beta", opts.betas, "beta weight(s), paired with --alpha")
      ->required()
      ->expected(1, -1);
  verify->add_flag("--coprime", config.coprime,
                   "compare against the coprime specialisation (alpha, beta >= 1 coprime)");
  add_common(verify, config);

  auto* klass = app.add_subcommand("verify-class",
                                   "power-structure assembly against the class product, in L");
  klass->add_option("--m", config.ms, "m = alpha + beta")->required()->expected(1, -1);
  add_common(klass, config);

  auto* series = app.add_subcommand("series", "print a generating series");
  series->add_option("--kind", config.kind, "rhs | lhs | assembled")
      ->transform(CLI::CheckedTransformer(std::map<std::string, SeriesKind>{
          {"rhs", SeriesKind::rhs}, {"lhs", SeriesKind::lhs}, {"assembled", SeriesKind::assembled}}));
  series->add_option("--m", config.ms, "m = alpha + beta (rhs, assembled)")->expected(0, 1);
  series->add_option("--alpha", opts.alphas, "alpha (lhs)")->expected(0, 1);
  series->add_option("--beta", opts.betas, "beta (lhs)")->expected(0, 1);
  series->add_option("--var", config.variable, "coefficient variable for rhs: q or L")
      ->check(CLI::IsMember({'q', 'L'}));
  add_common(series, config);

  auto* power = app.add_subcommand("power", "raise a series in L to a class power");
  power->add_option("--series", config.series_text, "series text, e.g. \"1 + t\"")->required();
  power->add_option("--exponent", config.exponent_text, "class in L, e.g. \"L - 1\"")
      ->capture_default_str();
  add_common(power, config);

  auto* decompose = app.add_subcommand("decompose", "Euler exponents b_i of a series in L");
  decompose->add_option("--series", config.series_text, "series text")->required();
  add_common(decompose, config);

  auto* table = app.add_subcommand("h-table", "h_{alpha,beta}(Y) for every |Y| <= order");
  table->add_option("--alpha", opts.alphas, "alpha")->required()->expected(1);
  table->add_option("--beta", opts.betas, "beta")->required()->expected(1);
  add_common(table, config);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    return RunResult{code == 0 ? kExitOk : kExitBadInput, out.str(), err.str()};
  }

  if (verify->parsed()) {
    config.command = Command::verify_identity;
  } else if (klass->parsed()) {
    config.command = Command::verify_class;
  } else if (series->parsed()) {
    config.command = Command::series;
  } else if (power->parsed()) {
    config.command = Command::power;
  } else if (decompose->parsed()) {
    config.command = Command::decompose;
  } else {
    config.command = Command::h_table;
  }

  if (opts.alphas.size() != opts.betas.size()) {
    return RunResult{kExitBadInput, "", "error: --alpha and --beta must have the same count\n"};
  }
  for (std::size_t k = 0; k < opts.alphas.size(); ++k) {
    config.pairs.emplace_back(opts.alphas[k], opts.betas[k]);
  }
  if (config.command == Command::series) {
    const bool needs_pair = config.kind == SeriesKind::lhs;
    if (needs_pair ? config.pairs.empty() : config.ms.empty()) {
      return RunResult{kExitBadInput, "",
                       needs_pair ? "error: series --kind lhs needs --alpha and --beta\n"
                                  : "error: series --kind rhs|assembled needs --m\n"};
    }
  }
  return config;
}

namespace {

std::string render_series(const TruncatedSeries& s, std::string_view label, Format format) {
  const std::string_view sym = symbol(s.variable());
  std::string out;
  if (format == Format::tsv) {
    out = "degree\tcoefficient\n";
    for (std::size_t n = 0; n <= s.order(); ++n) {
      out += std::to_string(n) + "\t" + to_string(s[n], sym) + "\n";
    }
    return out;
  }
  out = "series\n";
  out += "  kind: " + std::string(label) + "\n";
  out += "  variable: " + std::string(sym) + "\n";
  out += "  order: " + std::to_string(s.order()) + "\n";
  out += "  text: " + to_string(s) + "\n";
  out += "  coefficients\n";
  for (std::size_t n = 0; n <= s.order(); ++n) {
    out += "    " + std::to_string(n) + ": " + to_string(s[n], sym) + "\n";
  }
  return out;
}

RunResult run_reports(std::vector<std::future<IdentityReport>> jobs, Format format) {
  RunResult result;
  if (format == Format::tsv) result.output = tsv_header() + "\n";
  // get() in submission order keeps output independent of scheduling.
  for (auto& job : jobs) {
    const IdentityReport report = job.get();
    result.output += format == Format::tsv ? render_tsv(report) + "\n" : render_tree(report);
    if (!report.equal()) result.status = kExitMismatch;
  }
  return result;
}

RunResult run_h_table(int alpha, int beta, std::size_t order, Format format) {
  const HStatParams p(alpha, beta);
  RunResult result;
  if (format == Format::tsv) {
    result.output = "partition\tsize\th\n";
  } else {
    result.output = "h-table\n  alpha: " + std::to_string(alpha) +
                    "\n  beta: " + std::to_string(beta) + "\n  order: " + std::to_string(order) +
                    "\n  rows\n";
  }
  for (std::size_t n = 0; n <= order; ++n) {
    for (const Partition& y : enumerate_partitions(static_cast<int>(n))) {
      const int h = h_stat(y, p);
      if (format == Format::tsv) {
        result.output += to_string(y) + "\t" + std::to_string(n) + "\t" + std::to_string(h) + "\n";
      } else {
        result.output += "    " + to_string(y) + ": " + std::to_string(h) + "\n";
      }
    }
  }
  return result;
}

RunResult run_decompose(const TruncatedSeries& a, Format format) {
  const EulerDecomposition d = euler_decompose(a);
  RunResult result;
  if (format == Format::tsv) {
    result.output = "i\texponent\n";
    for (std::size_t i = 1; i <= d.order; ++i) {
      result.output += std::to_string(i) + "\t" + to_string(d.exponent(i)) + "\n";
    }
  } else {
    result.output = "decomposition\n  order: " + std::to_string(d.order) + "\n  exponents\n";
    for (std::size_t i = 1; i <= d.order; ++i) {
      result.output += "    " + std::to_string(i) + ": " + to_string(d.exponent(i)) + "\n";
    }
  }
  return result;
}

RunResult dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::verify_identity: {
      std::vector<std::future<IdentityReport>> jobs;
      for (const auto& [alpha, beta] : c.pairs) {
        // Validate eagerly so bad input surfaces before any work starts.
        if (c.coprime) {
          jobs.push_back(std::async(std::launch::async, verify_coprime, alpha, beta, c.order));
        } else {
          (void)HStatParams(alpha, beta);
          jobs.push_back(std::async(std::launch::async, verify_diagram_identity, alpha, beta, c.order));
        }
      }
      return run_reports(std::move(jobs), c.format);
    }
    case Command::verify_class: {
      std::vector<std::future<IdentityReport>> jobs;
      for (int m : c.ms) {
        if (m < 1) throw std::invalid_argument("--m must be >= 1");
        jobs.push_back(std::async(std::launch::async, verify_class_formula, m, c.order));
      }
      return run_reports(std::move(jobs), c.format);
    }
    case Command::series: {
      switch (c.kind) {
        case SeriesKind::rhs:
          return {kExitOk,
                  render_series(rhs_product_series(c.ms.front(),
                                                   c.variable == 'L' ? Variable::L : Variable::q,
                                                   c.order),
                                "rhs", c.format),
                  ""};
        case SeriesKind::assembled:
          return {kExitOk, render_series(assembled_class_series(c.ms.front(), c.order), "assembled", c.format),
                  ""};
        case SeriesKind::lhs: {
          const auto [alpha, beta] = c.pairs.front();
          return {kExitOk,
                  render_series(lhs_hstat_series(HStatParams(alpha, beta), c.order), "lhs",
                                c.format),
                  ""};
        }
      }
      break;
    }
    case Command::power: {
      const TruncatedSeries a = parse_series(c.series_text, c.order, Variable::L);
      const MotivicClass m(parse_polynomial(c.exponent_text, Variable::L));
      return {kExitOk, render_series(power_series(a, m), "power", c.format), ""};
    }
    case Command::decompose:
      return run_decompose(parse_series(c.series_text, c.order, Variable::L), c.format);
    case Command::h_table:
      return run_h_table(c.pairs.front().first, c.pairs.front().second, c.order, c.format);
  }
  throw std::logic_error("unhandled command");
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    result = dispatch(config);
  } catch (const std::invalid_argument& e) {
    return {kExitBadInput, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    return {kExitBadInput, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::out_of_range& e) {
    return {kExitBadInput, "", std::string("error: ") + e.what() + "\n"};
  }
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      return {kExitBadInput, "", "error: cannot open " + *config.output_path + " for writing\n"};
    }
    file << result.output;
    result.output.clear();
  }
  return result;
}

}  // namespace qhilb::cli
