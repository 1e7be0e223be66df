#include "wix/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "wix/constructors.hpp"
#include "wix/error.hpp"
#include "wix/exchange.hpp"
#include "wix/oracle.hpp"
#include "wix/serialize.hpp"
#include "wix/wiener.hpp"

namespace wix::cli {

std::vector<int> parse_degree_list(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(normalized);
  std::vector<int> degrees;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw Error(ErrorCode::kParse, "bad degree '" + token + "'");
    degrees.push_back(value);
  }
  return degrees;
}

std::uint64_t default_cap() {
  if (const char* env = std::getenv("WIX_CAP"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto cap = std::stoull(env, &used);
      if (used == std::string(env).size()) return cap;
    } catch (const std::exception&) {
    }
  }
  return kDefaultEnumerationCap;
}

ParseOutcome parse_args(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal Wiener index trees for a given degree sequence"};
  app.require_subcommand(1);

  CliConfig config;
  std::string degrees;
  std::string format = "json";
  std::string direction = "min";
  std::uint64_t cap = 0;
  std::size_t max_n = 0;

  const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::kJson},
                                                    {"dot", OutputFormat::kDot}};
  const std::map<std::string, Direction> directions{{"min", Direction::kMin},
                                                    {"max", Direction::kMax}};

  auto add_degrees = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--degrees,-d", degrees,
                                "internal-vertex degrees, comma or space separated");
    if (required) opt->required();
    return opt;
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format,-f", format, "output format")
        ->check(CLI::IsMember({"json", "dot"}));
  };
  auto add_input = [&](CLI::App* sub) {
    return sub->add_option("--input,-i", config.input_path, "tree JSON file");
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cap, "maximum number of labeled trees to enumerate");
    sub->add_option("--jobs,-j", config.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* min_cmd = app.add_subcommand("min", "greedy tree (Wiener minimizer)");
  add_degrees(min_cmd, true);
  add_format(min_cmd);
  auto* max_cmd = app.add_subcommand("max", "greedy caterpillar (candidate Wiener maximizer)");
  add_degrees(max_cmd, true);
  add_format(max_cmd);

  auto* wiener_cmd = app.add_subcommand("wiener", "Wiener index of a tree, by both algorithms");
  add_input(wiener_cmd)->required();

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive check of both constructors");
  auto* verify_degrees = add_degrees(verify_cmd, false);
  auto* verify_max_n = verify_cmd->add_option("--max-n", max_n, "every sequence with n <= N");
  verify_degrees->excludes(verify_max_n);
  add_cap(verify_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "labeled trees with a degree sequence");
  add_degrees(enumerate_cmd, true);
  enumerate_cmd->add_flag("--count-only", config.count_only, "print counts only");
  enumerate_cmd->add_flag("--distinct", config.distinct, "one tree per isomorphism class");
  add_format(enumerate_cmd);
  add_cap(enumerate_cmd);

  auto* search_cmd = app.add_subcommand("search", "local search with exchange moves");
  auto* search_degrees = add_degrees(search_cmd, false);
  auto* search_input = add_input(search_cmd);
  search_degrees->excludes(search_input);
  search_cmd->add_option("--direction", direction, "min or max")
      ->check(CLI::IsMember({"min", "max"}));
  search_cmd->add_option("--seed", config.seed, "random seed");
  add_format(search_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitInvalidInput};
  }

  if (min_cmd->parsed()) config.command = Command::kMin;
  if (max_cmd->parsed()) config.command = Command::kMax;
  if (wiener_cmd->parsed()) config.command = Command::kWiener;
  if (verify_cmd->parsed()) config.command = Command::kVerify;
  if (enumerate_cmd->parsed()) config.command = Command::kEnumerate;
  if (search_cmd->parsed()) config.command = Command::kSearch;

  try {
    for (CLI::App* sub : {min_cmd, max_cmd, verify_cmd, enumerate_cmd, search_cmd}) {
      if (sub->parsed() && sub->count("--degrees") > 0) config.degrees = parse_degree_list(degrees);
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return {std::nullopt, kExitInvalidInput};
  }
  if (verify_cmd->parsed() && verify_max_n->count() > 0) config.max_n = max_n;
  config.output_format = formats.at(format);
  if (search_cmd->parsed()) config.direction = directions.at(direction);
  config.cap = cap != 0 ? cap : default_cap();
  return {config, kExitOk};
}

namespace {

DegreeSequence sequence_from(const CliConfig& config) {
  if (!config.degrees) throw Error(ErrorCode::kInvalidArgument, "--degrees is required");
  return DegreeSequence::from_unsorted(*config.degrees);
}

Tree read_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return tree_from_json_string(text.str());
}

void emit_tree(std::ostream& out, OutputFormat format, const Tree& t,
               const std::string& json_extra, const std::string& dot_comment) {
  if (format == OutputFormat::kDot) {
    if (!dot_comment.empty()) out << "// " << dot_comment << '\n';
    out << to_dot(t);
  } else {
    out << "{\"tree\": " << to_json_string(t) << json_extra << "}\n";
  }
}

int run_min_max(const CliConfig& config, std::ostream& out) {
  const DegreeSequence ds = sequence_from(config);
  if (config.command == Command::kMin) {
    const RootedTree rt = build_greedy_tree(ds);
    const WienerValue sigma = wiener_edges(rt.tree());
    emit_tree(out, config.output_format, rt.tree(),
              ", \"root\": " + std::to_string(rt.root()) + ", \"wiener\": " + std::to_string(sigma),
              "wiener " + std::to_string(sigma));
  } else {
    const Tree t = build_greedy_caterpillar(ds);
    const WienerValue sigma = wiener_edges(t);
    emit_tree(out, config.output_format, t, ", \"wiener\": " + std::to_string(sigma),
              "wiener " + std::to_string(sigma));
  }
  return kExitOk;
}

int run_wiener(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.input_path) throw Error(ErrorCode::kInvalidArgument, "--input is required");
  const Tree t = read_tree(*config.input_path);
  const WienerValue pairwise = wiener_pairwise(t);
  const WienerValue by_edges = wiener_edges(t);
  out << "{\"pairwise\": " << pairwise << ", \"edges\": " << by_edges << "}\n";
  if (pairwise != by_edges) {
    err << "Wiener index mismatch: pairwise " << pairwise << ", edges " << by_edges << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

int run_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const ScanOptions options{config.cap, config.jobs};
  if (config.max_n) {
    nlohmann::json reports = nlohmann::json::array();
    for (const ExtremalReport& r : verify_theorems(*config.max_n, options)) {
      reports.push_back(to_json(r));
    }
    out << reports.dump() << '\n';
    err << reports.size() << " degree sequences verified\n";
    return kExitOk;
  }
  const ExtremalReport report = extremal_scan(sequence_from(config), options);
  out << to_json(report).dump() << '\n';
  if (!report.theorems_hold()) {
    err << "extremal tree mismatch for " << report.degree_sequence.to_string() << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

int run_enumerate(const CliConfig& config, std::ostream& out) {
  const DegreeSequence ds = sequence_from(config);
  if (config.count_only && !config.distinct) {
    out << "{\"labeled\": " << count_labeled(ds) << "}\n";
    return kExitOk;
  }
  const LabeledTreeEnumerator enumerator(ds, config.cap);
  std::set<std::string> classes;
  enumerator.for_each([&](const Tree& t) {
    if (config.distinct && !classes.insert(canonical_code(t)).second) return;
    if (config.count_only) return;
    if (config.output_format == OutputFormat::kDot) {
      out << to_dot(t);
    } else {
      out << to_json_string(t) << '\n';
    }
  });
  if (config.count_only) {
    out << "{\"labeled\": " << enumerator.count() << ", \"distinct\": " << classes.size() << "}\n";
  }
  return kExitOk;
}

int run_search(const CliConfig& config, std::ostream& out) {
  const Direction direction = config.direction.value_or(Direction::kMin);
  Tree start;
  if (config.input_path) {
    start = read_tree(*config.input_path);
  } else {
    std::mt19937_64 rng(config.seed);
    start = random_tree(sequence_from(config), rng);
  }
  const SearchResult result = local_search(start, direction, config.seed);
  const WienerValue begin = result.trajectory.front();
  const WienerValue end = result.trajectory.back();
  if (config.output_format == OutputFormat::kDot) {
    out << "// start " << begin << " end " << end << " moves " << result.moves << '\n'
        << to_dot(result.tree);
    return kExitOk;
  }
  nlohmann::json trajectory(result.trajectory);
  out << "{\"direction\": \"" << (direction == Direction::kMin ? "min" : "max")
      << "\", \"seed\": " << config.seed << ", \"start_wiener\": " << begin
      << ", \"end_wiener\": " << end << ", \"moves\": " << result.moves
      << ", \"trajectory\": " << trajectory.dump() << ", \"start\": " << to_json_string(start)
      << ", \"tree\": " << to_json_string(result.tree) << "}\n";
  return kExitOk;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kMin:
      case Command::kMax: return run_min_max(config, out);
      case Command::kWiener: return run_wiener(config, out, err);
      case Command::kVerify: return run_verify(config, out, err);
      case Command::kEnumerate: return run_enumerate(config, out);
      case Command::kSearch: return run_search(config, out);
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kTooLarge: return kExitCapExceeded;
      case ErrorCode::kTheoremViolation:
      case ErrorCode::kInconsistent: return kExitViolation;
      default: return kExitInvalidInput;
    }
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  ParseOutcome parsed = parse_args(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace wix::cli
