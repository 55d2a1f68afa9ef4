#include "p3c/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "p3c/graph_io.hpp"
#include "p3c/modules.hpp"
#include "p3c/p3_partition.hpp"
#include "p3c/random_graphs.hpp"
#include "p3c/theorem.hpp"
#include "p3c/verify.hpp"

namespace p3c {

namespace {

using nlohmann::json;

struct InputOptions {
  std::string path = "-";
  std::string format = "auto";
  bool as_json = false;
};

void add_input_options(CLI::App *cmd, InputOptions &opts) {
  cmd->add_option("input", opts.path, "graph file, '-' for stdin")->capture_default_str();
  cmd->add_option("--format", opts.format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}))
      ->capture_default_str();
  cmd->add_flag("--json", opts.as_json, "machine-readable output");
}

GraphFormat to_format(const std::string &name) {
  if (name == "edgelist")
    return GraphFormat::edge_list;
  if (name == "graph6")
    return GraphFormat::graph6;
  return GraphFormat::automatic;
}

std::string read_all(const std::string &path, std::istream &in) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Graph read_graph(const InputOptions &opts, std::istream &in) {
  return parse_graph(read_all(opts.path, in), to_format(opts.format));
}

Edge parse_edge_token(const std::string &token, const Graph &g) {
  const auto dash = token.find('-');
  int u = -1;
  int v = -1;
  const auto number = [](std::string_view s, int &value) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
  };
  if (dash == std::string::npos || !number(std::string_view(token).substr(0, dash), u) ||
      !number(std::string_view(token).substr(dash + 1), v))
    throw ParseError("edge token '" + token + "' is not of the form u-v");
  if (u == v || !g.edge_id(u, v))
    throw ParseError("edge " + token + " is not in the graph");
  return make_edge(u, v);
}

json edge_json(const Edge &e) { return json::array({e.u, e.v}); }

json witness_json(const std::optional<ModuleWitness> &w) {
  if (!w)
    return nullptr;
  return {{"members", w->members}, {"edge", edge_json(w->witness_edge)}};
}

std::string set_text(const VertexSet &s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

json verdict_json(const Graph &g, const TheoremVerdict &v) {
  return {{"n", g.order()},
          {"edges", g.size()},
          {"p3_connected", v.direct},
          {"direct", v.direct},
          {"fast", v.fast},
          {"agree", v.agree},
          {"connected", v.connected},
          {"class_count", v.class_count},
          {"witness", witness_json(v.witness)}};
}

void print_verdict(std::ostream &out, const TheoremVerdict &v) {
  out << "P3-connected: " << (v.direct ? "true" : "false") << " (m=" << v.class_count << ")\n";
  out << "direct: " << (v.direct ? "true" : "false") << ", fast: " << (v.fast ? "true" : "false")
      << ", connected: " << (v.connected ? "true" : "false") << '\n';
  if (v.witness)
    out << "witness: " << set_text(v.witness->members) << " edge " << to_string(v.witness->witness_edge) << '\n';
}

int cmd_check(const InputOptions &opts, std::istream &in, std::ostream &out, std::ostream &err) {
  const std::string text = read_all(opts.path, in);
  GraphFormat format = to_format(opts.format);
  if (format == GraphFormat::automatic)
    format = detect_format(text);

  std::vector<Graph> graphs;
  if (format == GraphFormat::graph6)
    graphs = parse_graph6_lines(text);
  else
    graphs.push_back(parse_edge_list(text));
  if (graphs.empty())
    throw ParseError("line 1: no graph in input");

  bool all_connected = true;
  bool all_agree = true;
  json batch = json::array();
  for (const auto &g : graphs) {
    const auto verdict = check_theorem(g);
    all_connected = all_connected && verdict.direct;
    all_agree = all_agree && verdict.agree;
    if (!verdict.agree)
      err << "disagreement between checkers on " << emit_graph6(g) << '\n';
    if (opts.as_json) {
      batch.push_back(verdict_json(g, verdict));
    } else if (graphs.size() == 1) {
      print_verdict(out, verdict);
    } else {
      out << emit_graph6(g) << " P3-connected: " << (verdict.direct ? "true" : "false")
          << " (m=" << verdict.class_count << ")";
      if (verdict.witness)
        out << " witness " << set_text(verdict.witness->members);
      out << '\n';
    }
  }
  if (opts.as_json)
    out << (graphs.size() == 1 ? batch.front() : batch).dump() << '\n';
  return all_connected && all_agree ? exit_ok : exit_negative;
}

int cmd_classes(const InputOptions &opts, std::istream &in, std::ostream &out) {
  const Graph g = read_graph(opts, in);
  const auto partition = p3_partition(g);
  if (opts.as_json) {
    json classes = json::array();
    for (const auto &cls : partition.classes) {
      json edges = json::array();
      for (EdgeId id : cls)
        edges.push_back(edge_json(g.edge(id)));
      classes.push_back({{"id", cls.front()}, {"edges", edges}});
    }
    out << json{{"class_count", partition.count()}, {"classes", classes}}.dump() << '\n';
  } else {
    out << "m=" << partition.count() << '\n';
    for (const auto &cls : partition.classes) {
      out << "class " << cls.front() << ":";
      for (EdgeId id : cls)
        out << ' ' << to_string(g.edge(id));
      out << '\n';
    }
  }
  return exit_ok;
}

int cmd_chain(const InputOptions &opts, const std::string &from, const std::string &to, std::istream &in,
              std::ostream &out) {
  const Graph g = read_graph(opts, in);
  const Edge e = parse_edge_token(from, g);
  const Edge f = parse_edge_token(to, g);
  const auto chain = p3_chain(g, e, f);
  if (opts.as_json) {
    json body = nullptr;
    if (chain) {
      body = json::array();
      for (const auto &edge : chain->edges)
        body.push_back(edge_json(edge));
    }
    out << json{{"chain", body}}.dump() << '\n';
  } else if (chain) {
    for (std::size_t i = 0; i < chain->edges.size(); ++i)
      out << (i ? " " : "") << to_string(chain->edges[i]);
    out << '\n';
  } else {
    out << "no chain: " << to_string(e) << " and " << to_string(f) << " lie in different classes\n";
  }
  return chain ? exit_ok : exit_negative;
}

int cmd_module(const InputOptions &opts, std::istream &in, std::ostream &out) {
  const Graph g = read_graph(opts, in);
  const auto witness = find_nonstable_homogeneous_set(g);
  if (opts.as_json) {
    if (witness)
      out << json{{"module", witness->members}, {"edge", edge_json(witness->witness_edge)}}.dump() << '\n';
    else
      out << json{{"module", nullptr}}.dump() << '\n';
  } else if (witness) {
    out << set_text(witness->members) << " edge " << to_string(witness->witness_edge) << '\n';
  } else {
    out << "no non-stable homogeneous set\n";
  }
  return witness ? exit_ok : exit_negative;
}

int cmd_export(const InputOptions &opts, bool plain, std::istream &in, std::ostream &out) {
  const Graph g = read_graph(opts, in);
  if (plain) {
    out << to_dot(g);
  } else {
    const auto partition = p3_partition(g);
    out << to_dot(g, &partition.class_of);
  }
  return exit_ok;
}

int cmd_gen(const std::string &kind, int n, double p, std::uint64_t seed, const std::string &format,
            std::ostream &out) {
  const Graph g = kind == "gnp" ? random_gnp(n, p, seed) : random_triangle_free(n, p, seed);
  if (format == "graph6")
    out << emit_graph6(g) << '\n';
  else
    out << emit_edge_list(g);
  return exit_ok;
}

int worker_count() {
  const char *env = std::getenv("P3C_THREADS");
  if (!env)
    return 1;
  int value = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
  return ec == std::errc{} && value > 0 ? value : 1;
}

int cmd_verify(const VerifyOptions &options, bool as_json, std::ostream &out) {
  const int workers = worker_count();
  VerifyReport report;
  if (workers > 1) {
#ifdef _OPENMP
    omp_set_num_threads(workers);
#endif
    report = verify_range_parallel(options);
  } else {
    report = verify_range(options);
  }
  if (as_json)
    out << report_to_json(report).dump(2) << '\n';
  else
    out << format_report(report);
  return report.ok() ? exit_ok : exit_negative;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"P3-connectivity toolkit", "p3c"};
  app.require_subcommand(1);

  InputOptions check_opts, classes_opts, chain_opts, module_opts, export_opts;
  auto *check = app.add_subcommand("check", "decide P3-connectivity with both checkers");
  add_input_options(check, check_opts);

  auto *classes = app.add_subcommand("classes", "list the P3 classes of the edge set");
  add_input_options(classes, classes_opts);

  std::string from, to;
  auto *chain = app.add_subcommand("chain", "shortest P3 chain between two edges");
  chain->add_option("input", chain_opts.path, "graph file, '-' for stdin")->required();
  chain->add_option("from", from, "first edge, u-v")->required();
  chain->add_option("to", to, "second edge, u-v")->required();
  chain->add_option("--format", chain_opts.format)->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  chain->add_flag("--json", chain_opts.as_json);

  auto *module = app.add_subcommand("module", "find a non-stable homogeneous set");
  add_input_options(module, module_opts);

  bool plain = false;
  auto *exporter = app.add_subcommand("export", "emit DOT, edges coloured by P3 class");
  add_input_options(exporter, export_opts);
  exporter->add_flag("--plain", plain, "omit class colours");

  VerifyOptions verify_opts;
  int n_min = 0;
  bool verify_json = false;
  auto *verify = app.add_subcommand("verify", "exhaustively cross-check both checkers");
  verify->add_option("--n", verify_opts.n_max, "largest order")->required()->check(CLI::Range(1, 8));
  verify->add_option("--n-min", n_min, "smallest order (default: --n)")->check(CLI::Range(1, 8));
  verify->add_flag("--connected-only,!--all-graphs", verify_opts.connected_only,
                   "scan connected graphs only (default)");
  verify->add_flag("--dedup", verify_opts.dedup, "one graph per isomorphism class");
  verify->add_flag("--json", verify_json);

  std::string kind;
  int gen_n = 0;
  double gen_p = 0.5;
  std::uint64_t seed = 0;
  std::string gen_format = "edgelist";
  auto *gen = app.add_subcommand("gen", "generate a random graph");
  gen->add_option("kind", kind, "gnp or triangle-free")
      ->required()
      ->check(CLI::IsMember({"gnp", "triangle-free"}));
  gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--p", gen_p, "edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gen->add_option("--seed", seed, "64-bit seed")->capture_default_str();
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"edgelist", "graph6"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return exit_input;
  }

  try {
    if (check->parsed())
      return cmd_check(check_opts, in, out, err);
    if (classes->parsed())
      return cmd_classes(classes_opts, in, out);
    if (chain->parsed())
      return cmd_chain(chain_opts, from, to, in, out);
    if (module->parsed())
      return cmd_module(module_opts, in, out);
    if (exporter->parsed())
      return cmd_export(export_opts, plain, in, out);
    if (gen->parsed())
      return cmd_gen(kind, gen_n, gen_p, seed, gen_format, out);
    if (verify->parsed()) {
      verify_opts.n_min = n_min > 0 ? n_min : verify_opts.n_max;
      return cmd_verify(verify_opts, verify_json, out);
    }
  } catch (const ParseError &e) {
    err << "input error: " << e.what() << '\n';
    return exit_input;
  } catch (const ContractViolation &e) {
    err << "input error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}

} // namespace p3c
