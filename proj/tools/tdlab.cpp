// tdlab: command-line front end for the tree-depth library.
//
// Exit codes: 0 success, 1 domain failure (infeasible labeling, failed
// verification, skipped graphs), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tdlab/criticality.hpp"
#include "tdlab/families.hpp"
#include "tdlab/io.hpp"
#include "tdlab/json_io.hpp"
#include "tdlab/search.hpp"
#include "tdlab/solver.hpp"
#include "tdlab/verify.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string format = "auto";
  bool json = false;
  int threads = 1;
  std::size_t budget = 0;
  std::string input;
  std::string graph_text;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

tdlab::GraphFormat parse_format(const std::string& name) {
  if (name == "auto") {
    return tdlab::GraphFormat::Auto;
  }
  if (name == "g6") {
    return tdlab::GraphFormat::Graph6;
  }
  return tdlab::GraphFormat::EdgeList;
}

tdlab::Graph load_graph(const CliConfig& cfg) {
  std::string text;
  if (!cfg.graph_text.empty()) {
    text = cfg.graph_text;
  } else if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) {
      throw UsageError("cannot open input file '" + cfg.input + "'");
    }
    text = read_all(in);
  } else {
    text = read_all(std::cin);
  }
  return tdlab::read_graph(text, parse_format(cfg.format));
}

tdlab::SolverOptions solver_options(const CliConfig& cfg) {
  return tdlab::SolverOptions{cfg.budget};
}

int cmd_td(const CliConfig& cfg) {
  const tdlab::Graph g = load_graph(cfg);
  const tdlab::TreeDepthWitness w = tdlab::tree_depth(g, solver_options(cfg));
  if (cfg.json) {
    std::cout << tdlab::to_json(w).dump() << "\n";
  } else {
    std::cout << w.value << "\n" << w.labeling.to_csv() << "\n";
  }
  return 0;
}

int cmd_check_labeling(const CliConfig& cfg, const std::string& csv) {
  const tdlab::Graph g = load_graph(cfg);
  const tdlab::Labeling lab = tdlab::Labeling::parse_csv(csv);
  if (static_cast<int>(lab.size()) != g.order()) {
    throw UsageError("labeling has " + std::to_string(lab.size()) + " entries but the graph has " +
                     std::to_string(g.order()) + " vertices");
  }
  const tdlab::FeasibilityResult result = tdlab::verify_feasible(g, lab);
  if (cfg.json) {
    nlohmann::json j{{"feasible", result.feasible}, {"labels", lab.max_label()}};
    if (result.violation) {
      j["violation"] = {{"label", result.violation->label},
                        {"u", result.violation->u},
                        {"v", result.violation->v}};
    }
    std::cout << j.dump() << "\n";
  } else if (result.feasible) {
    std::cout << "feasible\n";
  } else {
    std::cout << "infeasible at (" << result.violation->label << "," << result.violation->u << ","
              << result.violation->v << ")\n";
  }
  return result.feasible ? 0 : kExitDomain;
}

int cmd_report(const CliConfig& cfg) {
  const tdlab::Graph g = load_graph(cfg);
  const tdlab::CriticalityReport r = tdlab::criticality_report(g, solver_options(cfg));
  const nlohmann::json j = tdlab::to_json(r);
  if (cfg.json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& [key, value] : j.items()) {
    std::cout << key << ": " << value.dump() << "\n";
  }
  return 0;
}

int cmd_family(const CliConfig& cfg, const std::string& name, const std::string& arg) {
  const tdlab::Graph g = tdlab::generate(tdlab::parse_family(name, arg));
  if (cfg.format == "edges") {
    std::cout << tdlab::to_edge_list(g);
  } else {
    std::cout << tdlab::to_graph6(g) << "\n";
  }
  return 0;
}

struct SearchFlags {
  int order = 0;
  int min_order = 0;
  int td = 0;
  bool critical = false;
  bool non_one_unique = false;
  bool connected_only = false;
  bool allow_skips = false;
  std::string output;
};

int cmd_search(const CliConfig& cfg, const SearchFlags& flags) {
  tdlab::SearchJob job;
  if (!cfg.input.empty()) {
    if (flags.order != 0) {
      throw UsageError("--n and --input are mutually exclusive");
    }
    job.source = tdlab::SearchSource::stream(cfg.input);
  } else {
    if (flags.order == 0) {
      throw UsageError("search needs --n (built-in enumeration) or --input (graph6 stream)");
    }
    job.source = tdlab::SearchSource::builtin(flags.min_order == 0 ? flags.order : flags.min_order, flags.order);
  }
  job.td_target = flags.td;
  job.filters = {flags.critical, flags.non_one_unique, flags.connected_only};
  job.budget = solver_options(cfg);
  job.allow_skips = flags.allow_skips;
  job.threads = cfg.threads;

  const tdlab::SearchResult result = tdlab::run_search(job);
  std::ostringstream text;
  if (cfg.json || !flags.output.empty()) {
    text << tdlab::to_json(result).dump(2) << "\n";
  } else {
    const auto& c = result.counters;
    text << "source " << result.source << " config " << result.config_hash << "\n"
         << "scanned " << c.scanned << " at_target " << c.at_target << " critical " << c.critical
         << " counterexamples " << c.counterexamples << " skipped " << c.skipped << "\n";
    for (const tdlab::SearchHit& hit : result.hits) {
      text << hit.canonical.graph6 << " td " << hit.report.td
           << (hit.report.is_minor_critical ? " critical" : "")
           << (hit.report.is_one_unique_graph ? " 1-unique" : " not-1-unique") << "\n";
    }
  }
  if (!flags.output.empty()) {
    std::ofstream out(flags.output);
    if (!out) {
      throw UsageError("cannot write '" + flags.output + "'");
    }
    out << text.str();
  } else {
    std::cout << text.str();
  }
  if (!result.complete) {
    std::cerr << "search skipped " << result.counters.skipped << " graph(s) over budget\n";
    return kExitDomain;
  }
  return 0;
}

int cmd_verify_paper(const CliConfig& cfg, const std::string& level, const std::string& stream) {
  tdlab::VerifyOptions options;
  options.level = level == "quick" ? tdlab::VerifyLevel::Quick : tdlab::VerifyLevel::Full;
  options.threads = cfg.threads;
  if (!stream.empty()) {
    options.order8_stream = stream;
  }
  const auto ledger = tdlab::verify_paper(options);
  bool all = true;
  nlohmann::json j = nlohmann::json::array();
  for (const tdlab::LedgerLine& line : ledger) {
    all = all && line.pass;
    if (cfg.json) {
      j.push_back({{"id", line.id},
                   {"name", line.name},
                   {"pass", line.pass},
                   {"measured", line.measured},
                   {"expected", line.expected}});
    } else {
      std::cout << tdlab::format_line(line) << "\n";
    }
  }
  if (cfg.json) {
    std::cout << j.dump(2) << "\n";
  }
  return all ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tree-depth, criticality and 1-uniqueness toolkit"};
  app.require_subcommand(1);

  CliConfig cfg;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "Graph input format")
        ->check(CLI::IsMember({"auto", "g6", "edges"}));
    cmd->add_option("--input", cfg.input, "Input file (default: standard input)");
    cmd->add_option("--graph", cfg.graph_text, "Graph given inline instead of a file");
    cmd->add_flag("--json", cfg.json, "JSON output");
    cmd->add_option("--budget", cfg.budget, "Maximum solver memo states per tree-depth call (0 = no limit)");
  };

  auto* td = app.add_subcommand("td", "Tree-depth with a witness labeling");
  add_common(td);

  std::string csv;
  auto* check = app.add_subcommand("check-labeling", "Check a labeling for feasibility");
  add_common(check);
  check->add_option("labeling", csv, "Comma-separated labels in vertex order")->required();

  auto* report = app.add_subcommand("report", "Criticality and 1-uniqueness report");
  add_common(report);

  std::string family_name;
  std::string family_arg;
  auto* family = app.add_subcommand("family", "Emit a named graph as graph6");
  family->add_option("name", family_name, "Family name")->required();
  family->add_option("param", family_arg, "Integer parameter, or a pattern id for 'pattern'")->required();
  family->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"g6", "edges"}));

  SearchFlags flags;
  auto* search = app.add_subcommand("search", "Screen small graphs for critical / non-1-unique graphs");
  add_common(search);
  search->add_option("--n", flags.order, "Built-in enumeration up to this order (1..7)");
  search->add_option("--min-n", flags.min_order, "Smallest built-in order (default: --n)");
  search->add_option("--td", flags.td, "Target tree-depth")->required();
  search->add_flag("--critical", flags.critical, "Keep minor-critical graphs only");
  search->add_flag("--non-1-unique", flags.non_one_unique, "Keep graphs that are not 1-unique");
  search->add_flag("--connected-only", flags.connected_only, "Skip disconnected graphs");
  search->add_flag("--allow-skips", flags.allow_skips, "Do not fail on graphs skipped over budget");
  search->add_option("--output", flags.output, "Write the JSON result here");
  search->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::string level = "full";
  std::string stream;
  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance checks and print a ledger");
  verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--order8-stream", stream, "graph6 file of all 8-vertex graphs");
  verify->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", cfg.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*td) {
      return cmd_td(cfg);
    }
    if (*check) {
      return cmd_check_labeling(cfg, csv);
    }
    if (*report) {
      return cmd_report(cfg);
    }
    if (*family) {
      return cmd_family(cfg, family_name, family_arg);
    }
    if (*search) {
      return cmd_search(cfg, flags);
    }
    if (*verify) {
      return cmd_verify_paper(cfg, level, stream);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tdlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tdlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
