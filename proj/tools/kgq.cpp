#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kgq/builtin_rules.hpp"
#include "kgq/compiler.hpp"
#include "kgq/engine.hpp"
#include "kgq/ndjson.hpp"
#include "kgq/rule_parser.hpp"
#include "kgq/turtle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFatal = 2;
constexpr int kExitLimit = 3;
constexpr int kExitRuleDiagnostics = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// User rule files plus the selected builtins; names may be "all" or a
// comma-separated list.
std::vector<kgq::RuleAst> collect_rules(const std::vector<std::string>& files,
                                        const std::string& builtin_selector,
                                        bool& had_errors) {
  std::vector<kgq::RuleAst> rules;
  for (const auto& path : files) {
    kgq::ParseResult r = kgq::parse_rules(read_file(path));
    for (const auto& e : r.errors) {
      std::cerr << path << ":" << e.str() << "\n";
      had_errors = true;
    }
    for (auto& rule : r.rules) rules.push_back(std::move(rule));
  }
  if (builtin_selector == "all") {
    for (auto& r : kgq::load_builtin_rules()) rules.push_back(std::move(r));
  } else if (!builtin_selector.empty()) {
    std::vector<std::string> names;
    std::stringstream ss(builtin_selector);
    std::string name;
    while (std::getline(ss, name, ','))
      if (!name.empty()) names.push_back(name);
    for (auto& r : kgq::load_builtin_rules(names)) rules.push_back(std::move(r));
  }
  return rules;
}

int cmd_ingest(const std::string& in, const std::string& format,
               const std::string& out, const std::string& containment,
               const std::string& category_map) {
  kgq::KnowledgeGraph g;
  if (!containment.empty()) kgq::ContainmentTable::load_csv(containment);
  if (format == "ndjson") {
    g = kgq::read_graph_ndjson(in);
  } else {
    kgq::CategoryMap categories = kgq::CategoryMap::builtin();
    if (!category_map.empty()) categories.load_overrides_csv(category_map);
    kgq::IngestReport report = kgq::ingest_turtle_file(in, g, categories);
    for (const auto& d : report.diagnostics)
      std::cerr << d.where << ": " << d.message << "\n";
    std::cerr << "triples read: " << report.triples_read
              << ", skipped: " << report.triples_skipped
              << ", statements: " << report.statements << "\n";
  }
  kgq::write_graph_ndjson(g, out);
  return kExitOk;
}

int cmd_sorts(const std::string& in, const std::string& out) {
  kgq::KnowledgeGraph g = kgq::read_graph_ndjson(in);
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot open " + out);
  kgq::emit_sort_triples(g, os);
  return kExitOk;
}

int cmd_infer(const std::string& graph_path, const std::vector<std::string>& rule_files,
              const std::string& builtin_selector, std::size_t max_rounds,
              bool parallel, const std::string& containment,
              const std::string& inverse_map, const std::string& out,
              const std::string& report_path) {
  bool had_errors = false;
  std::vector<kgq::RuleAst> rules =
      collect_rules(rule_files, builtin_selector, had_errors);
  if (had_errors) return kExitRuleDiagnostics;

  kgq::EngineConfig config;
  config.max_rounds = max_rounds;
  config.parallel = parallel;
  if (!containment.empty())
    config.containment = kgq::ContainmentTable::load_csv(containment);
  if (!inverse_map.empty())
    config.inverses = kgq::InverseCauseMap::load_csv(inverse_map);

  kgq::KnowledgeGraph g = kgq::read_graph_ndjson(graph_path);
  kgq::RunReport report = kgq::Engine(config).run(g, rules);
  kgq::write_graph_ndjson(g, out);
  if (!report_path.empty()) {
    std::ofstream os(report_path);
    if (!os) throw std::runtime_error("cannot open " + report_path);
    os << report.to_json() << "\n";
  }
  for (const auto& d : report.diagnostics) std::cerr << d << "\n";
  return report.limit_hit ? kExitLimit : kExitOk;
}

int cmd_compile(const std::string& rule_file, const std::string& out_dir) {
  kgq::ParseResult r = kgq::parse_rules(read_file(rule_file));
  bool failed = false;
  for (const auto& e : r.errors) {
    std::cerr << rule_file << ":" << e.str() << "\n";
    failed = true;
  }
  if (failed) return kExitRuleDiagnostics;
  std::filesystem::create_directories(out_dir);
  for (const auto& rule : r.rules) {
    std::string query;
    try {
      query = kgq::compile_to_construct(rule);
    } catch (const std::runtime_error& e) {
      std::cerr << rule.name << ": " << e.what() << "\n";
      failed = true;
      continue;
    }
    std::string path = out_dir + "/" + rule.name + ".rq";
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << query;
  }
  return failed ? kExitRuleDiagnostics : kExitOk;
}

int cmd_check(const std::vector<std::string>& rule_files) {
  bool had_errors = false;
  std::size_t count = 0;
  for (const auto& path : rule_files) {
    kgq::ParseResult r = kgq::parse_rules(read_file(path));
    for (const auto& e : r.errors) {
      std::cerr << path << ":" << e.str() << "\n";
      had_errors = true;
    }
    count += r.rules.size();
  }
  std::cerr << count << " rule(s) checked\n";
  return had_errors ? kExitRuleDiagnostics : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reasoning over multi-qualified knowledge graph statements"};
  app.require_subcommand(1);

  auto* ingest = app.add_subcommand("ingest", "Read Turtle or NDJSON into a graph file");
  std::string in_path, format = "turtle", out_path, containment, category_map;
  ingest->add_option("--in", in_path, "input file")->required();
  ingest->add_option("--format", format, "turtle|ndjson")
      ->check(CLI::IsMember({"turtle", "ndjson"}));
  ingest->add_option("--out", out_path, "output graph (NDJSON)")->required();
  ingest->add_option("--containment", containment, "space containment CSV");
  ingest->add_option("--category-map", category_map, "qualifier category CSV");

  auto* sorts = app.add_subcommand("sorts", "Emit sort-value triples");
  std::string sorts_in, sorts_out;
  sorts->add_option("--in", sorts_in, "graph (NDJSON)")->required();
  sorts->add_option("--out", sorts_out, "output Turtle")->required();

  auto* infer = app.add_subcommand("infer", "Run rules to fixpoint");
  std::string graph_path, builtin_selector, inverse_map, infer_out, report_path;
  std::string infer_containment;
  std::vector<std::string> rule_files;
  std::size_t max_rounds = 100;
  bool parallel = false;
  infer->add_option("--graph", graph_path, "input graph (NDJSON)")->required();
  infer->add_option("--rules", rule_files, "rule files");
  infer->add_option("--builtin", builtin_selector, "all | comma-separated names");
  infer->add_option("--max-rounds", max_rounds, "round limit");
  infer->add_flag("--parallel", parallel, "evaluate rules in parallel per round");
  infer->add_option("--containment", infer_containment, "space containment CSV");
  infer->add_option("--inverse-map", inverse_map, "inverse-cause CSV");
  infer->add_option("--out", infer_out, "output graph (NDJSON)")->required();
  infer->add_option("--report", report_path, "run report (JSON)");

  auto* compile = app.add_subcommand("compile", "Compile rules to SPARQL CONSTRUCT");
  std::string rule_file, out_dir;
  compile->add_option("--rule", rule_file, "rule file")->required();
  compile->add_option("--out", out_dir, "output directory")->required();

  auto* check = app.add_subcommand("check", "Parse and typecheck rule files");
  std::vector<std::string> check_files;
  check->add_option("--rules", check_files, "rule files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest) return cmd_ingest(in_path, format, out_path, containment, category_map);
    if (*sorts) return cmd_sorts(sorts_in, sorts_out);
    if (*infer)
      return cmd_infer(graph_path, rule_files, builtin_selector, max_rounds, parallel,
                       infer_containment, inverse_map, infer_out, report_path);
    if (*compile) return cmd_compile(rule_file, out_dir);
    if (*check) return cmd_check(check_files);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitUsage;
}
