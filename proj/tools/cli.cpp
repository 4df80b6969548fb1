#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mostar/bounds.hpp"
#include "mostar/enumerate.hpp"
#include "mostar/error.hpp"
#include "mostar/families.hpp"
#include "mostar/graph6.hpp"
#include "mostar/mostar.hpp"
#include "mostar/report.hpp"
#include "mostar/verify.hpp"
#include "mostar/version.hpp"

namespace mostar::cli {
namespace {

using nlohmann::json;

enum class Format { kMachine, kTable };

struct Options {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> mu;
  int max_n = enumerate::kDefaultMaxOrder;
  std::string objective;
  std::string claims = "all";
  std::string format;
  std::string out_path;
  std::string in_path;
  std::string family;
  int workers = 0;
};

Format parse_format(const std::string& text, Format fallback) {
  if (text.empty()) return fallback;
  if (text == "machine") return Format::kMachine;
  if (text == "table") return Format::kTable;
  throw Error(ErrorKind::kParse, "unknown --format '" + text + "' (machine|table)");
}

// Writes to --out when given, else to the command's stdout.
void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::kIo, "cannot open '" + opt.out_path + "' for writing");
  file << text;
  if (!file.flush()) throw Error(ErrorKind::kIo, "failed writing '" + opt.out_path + "'");
}

int require_value(const std::optional<int>& v, const char* flag) {
  if (!v) throw Error(ErrorKind::kParse, std::string("missing ") + flag);
  return *v;
}

std::string summary_line(const Graph& g) {
  std::ostringstream s;
  s << "n=" << g.order() << " m=" << g.size() << " k=" << bridge_count(g) << " mu=" << cyclomatic_number(g)
    << " Mo=" << mostar_index(g);
  return s.str();
}

int cmd_compute(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  std::ifstream file;
  std::istream* source = &in;
  if (!opt.in_path.empty() && opt.in_path != "-") {
    file.open(opt.in_path);
    if (!file) throw Error(ErrorKind::kIo, "cannot open '" + opt.in_path + "'");
    source = &file;
  }
  const Format format = parse_format(opt.format, Format::kTable);
  std::ostringstream body;
  std::string line;
  int line_no = 0;
  int ok = 0;
  int failed = 0;
  while (std::getline(*source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      const Graph g = graph6::decode(line);
      if (!is_connected(g)) throw Error(ErrorKind::kNotConnected, "graph is disconnected");
      const auto profile = contribution_profile(g);
      const int mo = mostar_index(g);
      if (format == Format::kMachine) {
        json j{{"line", line_no}, {"graph6", line}, {"n", g.order()}, {"m", g.size()}, {"mostar", mo}};
        j["profile"] = json::array();
        for (const auto& c : profile) j["profile"].push_back(report::to_json(c));
        body << j.dump() << "\n";
      } else {
        body << line << "\tMo=" << mo << "\n";
        for (const auto& c : profile) {
          body << "  (" << c.edge.u << "," << c.edge.v << ") n_u=" << c.n_u << " n_v=" << c.n_v
               << " tied=" << c.equidistant << " |diff|=" << c.imbalance << "\n";
        }
      }
      ++ok;
    } catch (const Error& e) {
      ++failed;
      if (format == Format::kMachine) {
        body << json{{"line", line_no}, {"input", line}, {"error", e.what()}}.dump() << "\n";
      } else {
        body << line << "\tERROR " << e.what() << "\n";
      }
      err << "line " << line_no << ": " << e.what() << "\n";
    }
  }
  emit(opt, out, body.str());
  return (failed > 0 && ok == 0) ? 1 : 0;
}

int cmd_construct(const Options& opt, std::ostream& out) {
  auto spec = families::parse_family_spec(opt.family);
  if (opt.n) spec.n = *opt.n;
  if (opt.k) spec.k = opt.k;
  if (opt.mu) spec.mu = opt.mu;
  const Graph g = families::build(spec);
  const std::string g6 = graph6::encode(g);
  if (parse_format(opt.format, Format::kTable) == Format::kMachine) {
    json j{{"family", families::to_string(spec.family)},
           {"graph6", g6},
           {"n", g.order()},
           {"m", g.size()},
           {"k", bridge_count(g)},
           {"mu", cyclomatic_number(g)},
           {"mostar", mostar_index(g)}};
    emit(opt, out, j.dump() + "\n");
  } else {
    emit(opt, out, g6 + "\n" + summary_line(g) + "\n");
  }
  return 0;
}

int cmd_bounds(const Options& opt, std::ostream& out) {
  const int n = require_value(opt.n, "--n");
  const int k = require_value(opt.k, "--k");
  const int mu = opt.mu.value_or(0);
  json j{{"n", n}, {"k", k}, {"max_bound", bounds::max_bound(n, k)}, {"min_bound", bounds::min_bound(n, k)}};
  if (n >= 3) {
    j["mu"] = mu;
    j["cyclomatic_bound"] = bounds::cyclomatic_bound(n, k, mu);
  }
  if (parse_format(opt.format, Format::kTable) == Format::kMachine) {
    emit(opt, out, j.dump() + "\n");
  } else {
    std::ostringstream s;
    s << "max_bound(" << n << "," << k << ") = " << j["max_bound"].get<long long>() << "\n";
    s << "min_bound(" << n << "," << k << ") = " << j["min_bound"].get<long long>() << "\n";
    if (n >= 3) {
      s << "cyclomatic_bound(" << n << "," << k << "," << mu << ") = " << j["cyclomatic_bound"].get<long long>()
        << "\n";
    }
    emit(opt, out, s.str());
  }
  return 0;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const int n = require_value(opt.n, "--n");
  enumerate::check_order(n, enumerate::order_cap());
  const enumerate::GraphClassFilter filter{n, opt.k, opt.mu};
  const Format format = parse_format(opt.format, Format::kTable);
  if (opt.objective.empty()) {
    const auto count = enumerate::count_class(filter, opt.workers);
    if (format == Format::kMachine) {
      json j{{"n", n}, {"count", count}};
      if (opt.k) j["k"] = *opt.k;
      if (opt.mu) j["mu"] = *opt.mu;
      emit(opt, out, j.dump() + "\n");
    } else {
      emit(opt, out, std::to_string(count) + "\n");
    }
    return 0;
  }
  enumerate::Objective objective;
  if (opt.objective == "max") {
    objective = enumerate::Objective::kMax;
  } else if (opt.objective == "min") {
    objective = enumerate::Objective::kMin;
  } else {
    throw Error(ErrorKind::kParse, "unknown --objective '" + opt.objective + "' (max|min)");
  }
  const auto result = enumerate::extremal_search(filter, objective, opt.workers);
  if (format == Format::kMachine) {
    emit(opt, out, report::to_json(result).dump() + "\n");
  } else {
    std::ostringstream s;
    s << "class size (labeled): " << result.class_size_labeled << "\n";
    if (result.empty()) {
      s << "EMPTY class\n";
    } else {
      s << enumerate::to_string(objective) << " Mo = " << *result.value << " (" << result.optimal_labeled
        << " labeled graphs, " << result.witnesses.size() << " up to isomorphism)\n";
      for (const auto& w : result.witnesses) s << w << "\n";
    }
    emit(opt, out, s.str());
  }
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  verify::RunConfig config;
  config.max_n = opt.max_n;
  config.workers = opt.workers;
  if (opt.claims != "all") {
    std::stringstream list(opt.claims);
    std::string item;
    while (std::getline(list, item, ',')) {
      const auto id = verify::parse_claim(item);
      if (!id) throw Error(ErrorKind::kParse, "unknown claim '" + item + "'");
      config.claims.push_back(*id);
    }
  }
  const auto report = verify::run_all(config);
  const Format format = parse_format(opt.format, Format::kMachine);
  emit(opt, out, format == Format::kMachine ? report::render_machine(report) : report::render_table(report));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mostar index laboratory: compute, construct, bound, enumerate and verify"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "machine|table");
    sub->add_option("--out", opt.out_path, "write output to this file");
  };

  auto* compute = app.add_subcommand("compute", "Mostar index and per-edge profile of graph6 lines");
  compute->add_option("input", opt.in_path, "graph6 file (default: stdin)");
  add_format(compute);

  auto* construct = app.add_subcommand("construct", "build a named family graph");
  construct->add_option("spec", opt.family, "family=name,n=..,k=..,mu=..")->required();
  construct->add_option("--n", opt.n);
  construct->add_option("--k", opt.k);
  construct->add_option("--mu", opt.mu);
  add_format(construct);

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the closed-form bounds");
  bounds_cmd->add_option("--n", opt.n)->required();
  bounds_cmd->add_option("--k", opt.k)->required();
  bounds_cmd->add_option("--mu", opt.mu);
  add_format(bounds_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "count a graph class or search its extremes");
  enumerate_cmd->add_option("--n", opt.n)->required();
  enumerate_cmd->add_option("--k", opt.k);
  enumerate_cmd->add_option("--mu", opt.mu);
  enumerate_cmd->add_option("--objective", opt.objective, "max|min");
  enumerate_cmd->add_option("--workers", opt.workers, "worker threads (0: all)");
  add_format(enumerate_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "audit every claim against exhaustive enumeration");
  verify_cmd->add_option("--claims", opt.claims, "comma list of claim ids, or all");
  verify_cmd->add_option("--max-n", opt.max_n, "largest order enumerated");
  verify_cmd->add_option("--workers", opt.workers, "worker threads (0: all)");
  add_format(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*compute) return cmd_compute(opt, in, out, err);
    if (*construct) return cmd_construct(opt, out);
    if (*bounds_cmd) return cmd_bounds(opt, out);
    if (*enumerate_cmd) return cmd_enumerate(opt, out);
    if (*verify_cmd) return cmd_verify(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mostar::cli
