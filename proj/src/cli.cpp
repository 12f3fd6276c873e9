#include "homalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "homalg/algebra.hpp"
#include "homalg/bipred.hpp"
#include "homalg/config.hpp"
#include "homalg/counterexample.hpp"
#include "homalg/error.hpp"
#include "homalg/family.hpp"
#include "homalg/homcount.hpp"
#include "homalg/io.hpp"
#include "homalg/iso.hpp"
#include "homalg/predicates.hpp"
#include "homalg/survey.hpp"
#include "homalg/verdict.hpp"

namespace homalg::cli {
namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  RunConfig config;
};

Graph load(Context& ctx, const std::string& path) {
  if (path == "-") {
    std::string text{std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>()};
    return parse_graph(text);
  }
  return read_graph_file(path);
}

GraphFormat parse_format(const std::string& f) {
  if (f == "el" || f == "edgelist") return GraphFormat::EdgeList;
  if (f == "json") return GraphFormat::Json;
  throw ParameterError("unknown graph format '" + f + "' (use el or json)");
}

void emit(Context& ctx, const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    ctx.out << text;
    if (!text.empty() && text.back() != '\n') ctx.out << '\n';
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + out_path + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

// ---------------------------------------------------------------- hom
struct HomArgs {
  std::vector<std::string> files;
  bool bruteforce = false;
  std::vector<std::size_t> kdd;
  std::size_t clique = 0;
};

int cmd_hom(Context& ctx, const HomArgs& a) {
  const bool closed_form = !a.kdd.empty() || a.clique;
  if (!a.kdd.empty() && a.clique) throw ParameterError("--kdd and --clique are exclusive");
  if (closed_form && a.bruteforce)
    throw ParameterError("--bruteforce applies to a source graph file, not --kdd/--clique");
  if (closed_form && a.files.size() != 1)
    throw ParameterError("--kdd/--clique take exactly one target graph file");
  if (!closed_form && a.files.size() != 2)
    throw ParameterError("hom takes a source graph file and a target graph file");
  HomCount c;
  if (!a.kdd.empty()) {
    c = hom_from_complete_bipartite(a.kdd[0], a.kdd[1], load(ctx, a.files[0]));
  } else if (a.clique) {
    c = hom_from_complete(a.clique, load(ctx, a.files[0]));
  } else {
    const Graph g = load(ctx, a.files[0]);
    const Graph h = load(ctx, a.files[1]);
    c = a.bruteforce ? hom_bruteforce(g, h, ctx.config.oracle_cap)
                     : hom_count(g, h, ctx.config.count_options());
  }
  ctx.out << to_decimal(c) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- op
struct OpArgs {
  std::string name;
  std::vector<std::string> operands;
  std::string output;
  std::string format = "el";
  std::optional<std::size_t> complete, cycle, looped, empty, path;
  std::vector<std::size_t> bipartite;
  bool ind = false, wr = false;
};

Graph family_from(const OpArgs& a) {
  std::vector<Graph> picked;
  if (a.complete) picked.push_back(complete(*a.complete));
  if (!a.bipartite.empty()) picked.push_back(complete_bipartite(a.bipartite[0], a.bipartite[1]));
  if (a.cycle) picked.push_back(cycle(*a.cycle));
  if (a.looped) picked.push_back(looped_points(*a.looped));
  if (a.empty) picked.push_back(empty_graph(*a.empty));
  if (a.path) picked.push_back(path(*a.path));
  if (a.ind) picked.push_back(independent_set_graph());
  if (a.wr) picked.push_back(widom_rowlinson());
  if (picked.size() != 1)
    throw ParameterError(
        "family needs exactly one of --complete, --bipartite, --cycle, --looped, --empty, "
        "--path, --ind, --wr");
  return picked.front();
}

int cmd_op(Context& ctx, const OpArgs& a) {
  auto arity = [&](std::size_t k) {
    if (a.operands.size() != k)
      throw ParameterError("op " + a.name + " takes " + std::to_string(k) + " graph operand(s)");
  };
  auto operand = [&](std::size_t i) { return load(ctx, a.operands[i]); };
  Graph result;
  if (a.name == "family") {
    arity(0);
    result = family_from(a);
  } else if (a.name == "tensor") {
    arity(2);
    result = tensor(operand(0), operand(1));
  } else if (a.name == "power") {
    arity(2);
    result = power(operand(0), operand(1), ctx.config.power_cap);
  } else if (a.name == "union") {
    arity(2);
    result = disjoint_union(operand(0), operand(1));
  } else if (a.name == "join") {
    arity(2);
    result = join(operand(0), operand(1));
  } else if (a.name == "loopall") {
    arity(1);
    result = loop_all(operand(0));
  } else if (a.name == "loopsub") {
    arity(1);
    result = looped_subgraph(operand(0));
  } else if (a.name == "doublecover") {
    arity(1);
    result = double_cover(operand(0));
  } else if (a.name == "complement") {
    arity(1);
    result = complement(operand(0));
  } else {
    throw ParameterError("unknown operation '" + a.name +
                         "' (tensor, power, union, join, loopall, loopsub, doublecover, "
                         "complement, family)");
  }
  emit(ctx, serialize_graph(result, parse_format(a.format)), a.output);
  return kOk;
}

// ---------------------------------------------------------------- iso
int cmd_iso(Context& ctx, const std::vector<std::string>& files) {
  const Graph a = load(ctx, files.at(0)), b = load(ctx, files.at(1));
  const bool iso = is_isomorphic(a, b, ctx.config.iso_cap);
  ctx.out << (iso ? "isomorphic" : "not isomorphic") << '\n';
  return iso ? kOk : kVerdictNegative;
}

// ---------------------------------------------------------------- check
struct CheckArgs {
  std::string file;
  bool bipartite = false, regular = false, hbst = false, bipred = false, zhao = false;
  bool json = false;
  std::size_t limit = 6;
  std::string format = "el";
};

int cmd_check(Context& ctx, const CheckArgs& a) {
  const int chosen = a.bipartite + a.regular + a.hbst + a.bipred + a.zhao;
  if (chosen != 1)
    throw ParameterError("check needs exactly one of --bipartite, --regular, --hbst, --bipred, --zhao");
  const Graph g = load(ctx, a.file);
  nlohmann::json j;
  std::string text;
  int code = kOk;
  if (a.bipartite) {
    const auto sides = is_bipartite(g);
    j["check"] = "bipartite";
    j["holds"] = sides.has_value();
    if (sides) {
      const auto ones = static_cast<std::size_t>(std::count(sides->begin(), sides->end(), 1));
      j["sides"] = *sides;
      text = "bipartite (sides " + std::to_string(g.order() - ones) + ", " +
             std::to_string(ones) + ")";
    } else {
      text = "not bipartite";
      code = kVerdictNegative;
    }
  } else if (a.regular) {
    const auto d = regularity(g);
    j["check"] = "regular";
    j["holds"] = d.has_value();
    if (d) {
      j["degree"] = *d;
      text = std::to_string(*d) + "-regular";
    } else {
      text = "not regular";
      code = kVerdictNegative;
    }
  } else if (a.hbst) {
    const Graph b = build_hbst(g);
    const bool bip = is_bipartite(b).has_value();
    if (a.json) {
      j["check"] = "hbst";
      j["graph"] = graph_to_json(b);
      j["bipartite"] = bip;
    } else {
      text = serialize_graph(b, parse_format(a.format));
    }
  } else if (a.zhao) {
    const bool ok = zhao_criterion(g);
    j["check"] = "zhao";
    j["holds"] = ok;
    text = ok ? "passes: H^bst bipartite" : "fails: H^bst non-bipartite";
    code = ok ? kOk : kVerdictNegative;
  } else {
    const auto v = check_bipartite_reducible(g, a.limit, ctx.config.count_options());
    j = v.to_json();
    j["check"] = "bipred";
    if (v.status == BipRedStatus::NoCounterexample) {
      text = "no counterexample up to order " + std::to_string(a.limit) + " (" +
             std::to_string(v.graphs_checked) + " graphs checked)";
    } else {
      text = "counterexample found: hom(G,H)^2 = " + to_decimal(v.witness_hom * v.witness_hom) +
             " > hom(G x K_2,H) = " + to_decimal(v.witness_cover_hom) + " for G =\n" +
             serialize_graph(*v.witness);
      code = kVerdictNegative;
    }
  }
  if (a.json)
    ctx.out << j.dump() << '\n';
  else
    emit(ctx, text, "");
  return code;
}

// ---------------------------------------------------------------- counterexample
struct CounterexampleArgs {
  std::optional<std::size_t> d;
  std::string h_file, g_file, output, verify;
  bool json = false;
};

void print_verdicts(Context& ctx, const CounterexampleCertificate& c) {
  ctx.out << "d = " << c.d << ", n = " << c.g.order() << ", k = " << c.k << '\n';
  ctx.out << "hom(G,kH) = " << to_decimal(c.hom_g_kh) << '\n';
  ctx.out << "hom(K_{d,d},kH) = " << to_decimal(c.hom_kdd_kh) << '\n';
  ctx.out << "hom(K_{d+1},kH) = " << to_decimal(c.hom_kd1_kh) << '\n';
  ctx.out << "verdict_kdd: hom(G,kH)^" << c.verdict_kdd.exponent_clearing << " vs hom(K_{d,d},kH)^"
          << c.verdict_kdd.rhs_exponent << ": " << to_string(c.verdict_kdd.relation) << '\n';
  ctx.out << "verdict_kd1: hom(G,kH)^" << c.verdict_kd1.exponent_clearing << " vs hom(K_{d+1},kH)^"
          << c.verdict_kd1.rhs_exponent << ": " << to_string(c.verdict_kd1.relation) << '\n';
}

int cmd_counterexample(Context& ctx, const CounterexampleArgs& a) {
  if (!a.verify.empty()) {
    std::ifstream f(a.verify);
    if (!f) throw InputError("cannot open certificate '" + a.verify + "'");
    nlohmann::json j;
    try {
      f >> j;
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(a.verify + ": " + e.what());
    }
    const auto cert = CounterexampleCertificate::from_json(j);
    const auto check = verify_certificate(cert, ctx.config.count_options());
    print_verdicts(ctx, cert);
    ctx.out << (check.ok ? "verified: " : "REJECTED: ") << check.message << '\n';
    return check.ok ? kOk : kVerdictNegative;
  }
  if (!a.d) throw ParameterError("counterexample needs d");
  const std::size_t d = *a.d;
  if (a.h_file.empty() != a.g_file.empty())
    throw ParameterError("supply both --h and --g, or neither");
  Graph h, g;
  if (a.h_file.empty()) {
    if (d < 7)
      throw ParameterError("no default construction for d = " + std::to_string(d) +
                           "; supply --h and --g (defaults need d >= 7)");
    h = complete(d);
    g = default_counterexample_source(d);
  } else {
    h = load(ctx, a.h_file);
    g = load(ctx, a.g_file);
  }
  const auto cert = build_counterexample(d, h, g, ctx.config.count_options());
  if (a.json) {
    ctx.out << cert.to_json().dump() << '\n';
    return kOk;
  }
  print_verdicts(ctx, cert);
  if (!a.output.empty()) {
    emit(ctx, cert.to_json().dump(), a.output);
    ctx.out << "certificate written to " << a.output << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- survey
struct SurveyArgs {
  std::size_t n = 0, d = 0;
  std::vector<std::string> h_file;
  bool wr = false;
  std::vector<std::string> wr_target;
};

int cmd_survey(Context& ctx, const SurveyArgs& a) {
  const int sources = !a.h_file.empty() + a.wr + !a.wr_target.empty();
  if (sources != 1)
    throw ParameterError("survey needs exactly one target: a graph file, --wr, or --wr-target H B");
  if ((a.n * a.d) % 2)
    throw ParameterError("no " + std::to_string(a.d) + "-regular graph on " +
                         std::to_string(a.n) + " vertices: n*d is odd");
  Graph target;
  if (!a.h_file.empty())
    target = load(ctx, a.h_file[0]);
  else if (a.wr)
    target = widom_rowlinson();
  else
    target = wr_target(load(ctx, a.wr_target[0]), load(ctx, a.wr_target[1]), ctx.config.power_cap);
  const auto report =
      survey_maximizer(a.n, a.d, target, ctx.config.enum_cap, ctx.config.count_options());
  ctx.out << report.to_csv() << report.summary();
  return kOk;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return kInputError;
  if (dynamic_cast<const ResourceError*>(&e)) return kResourceCap;
  if (dynamic_cast<const ParameterError*>(&e) || dynamic_cast<const PreconditionError*>(&e))
    return kParameterError;
  return kInternalError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{in, out, err, {}};
  CLI::App app{"Exact graph homomorphism algebra toolkit", "homalg"};
  app.require_subcommand(1);
  std::string config_file;
  std::optional<std::uint64_t> oracle_cap, power_cap, seed;
  std::optional<std::size_t> iso_cap, enum_cap;
  std::optional<unsigned> threads;
  app.add_option("--config", config_file, "RunConfig JSON file (overrides HOMALG_CONFIG)");
  app.add_option("--oracle-cap", oracle_cap, "max candidate maps for --bruteforce");
  app.add_option("--power-cap", power_cap, "max vertices of a materialized power");
  app.add_option("--iso-cap", iso_cap, "max order for isomorphism tests");
  app.add_option("--enum-cap", enum_cap, "max order for regular enumeration");
  app.add_option("--threads", threads, "worker threads for counting");
  app.add_option("--seed", seed, "randomization seed");

  HomArgs hom;
  auto* hom_cmd = app.add_subcommand("hom", "count homomorphisms G -> H");
  hom_cmd->add_option("files", hom.files, "G and H graph files (only H with --kdd/--clique)")
      ->required()
      ->expected(1, 2);
  hom_cmd->add_flag("--bruteforce", hom.bruteforce, "enumerate every vertex map");
  hom_cmd->add_option("--kdd", hom.kdd, "count from K_{a,b}")->expected(2);
  hom_cmd->add_option("--clique", hom.clique, "count from K_q");

  OpArgs op;
  auto* op_cmd = app.add_subcommand("op", "apply a graph operation and print the result");
  op_cmd->add_option("name", op.name, "tensor|power|union|join|loopall|loopsub|doublecover|complement|family")
      ->required();
  op_cmd->add_option("operands", op.operands, "operand graph files ('-' = stdin)");
  op_cmd->add_option("-o,--output", op.output, "output file (default stdout)");
  op_cmd->add_option("--format", op.format, "el or json");
  op_cmd->add_option("--complete", op.complete, "family: K_q");
  op_cmd->add_option("--bipartite", op.bipartite, "family: K_{a,b}")->expected(2);
  op_cmd->add_option("--cycle", op.cycle, "family: C_n");
  op_cmd->add_option("--looped", op.looped, "family: l_k");
  op_cmd->add_option("--empty", op.empty, "family: E_n");
  op_cmd->add_option("--path", op.path, "family: path on n vertices");
  op_cmd->add_flag("--ind", op.ind, "family: independent-set graph");
  op_cmd->add_flag("--wr", op.wr, "family: Widom-Rowlinson graph");

  std::vector<std::string> iso_files;
  auto* iso_cmd = app.add_subcommand("iso", "test two graphs for isomorphism");
  iso_cmd->add_option("files", iso_files, "two graph files")->required()->expected(2);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "structural predicates of a graph");
  check_cmd->add_option("file", check.file, "graph file")->required();
  check_cmd->add_flag("--bipartite", check.bipartite);
  check_cmd->add_flag("--regular", check.regular);
  check_cmd->add_flag("--hbst", check.hbst, "print Zhao's auxiliary graph");
  check_cmd->add_flag("--bipred", check.bipred, "search for a bipartite-reducibility violation");
  check_cmd->add_flag("--zhao", check.zhao, "Zhao's H^bst criterion");
  check_cmd->add_option("--limit", check.limit, "max source order for --bipred (<= 8)");
  check_cmd->add_option("--format", check.format, "graph format for --hbst");
  check_cmd->add_flag("--json", check.json, "machine-readable output");

  CounterexampleArgs cx;
  auto* cx_cmd = app.add_subcommand("counterexample", "build a certificate violating both bounds");
  // "--h" would clash with the short help flag, so this subcommand only has the long form.
  cx_cmd->set_help_flag("--help", "Print this help message and exit");
  cx_cmd->add_option("d", cx.d, "regularity");
  cx_cmd->add_option("--h", cx.h_file, "loop-free target H without a (d+1)-clique");
  cx_cmd->add_option("--g", cx.g_file, "connected d-regular G on fewer than 2d vertices");
  cx_cmd->add_option("-o,--output", cx.output, "write the certificate JSON here");
  cx_cmd->add_option("--verify", cx.verify, "re-check an existing certificate file");
  cx_cmd->add_flag("--json", cx.json, "print the certificate JSON instead of a summary");

  SurveyArgs sv;
  auto* sv_cmd = app.add_subcommand("survey", "hom(G,H) over all d-regular G on n vertices (CSV)");
  sv_cmd->add_option("n", sv.n)->required();
  sv_cmd->add_option("d", sv.d)->required();
  sv_cmd->add_option("target", sv.h_file, "target graph file")->expected(0, 1);
  sv_cmd->add_flag("--wr", sv.wr, "target the Widom-Rowlinson graph");
  sv_cmd->add_option("--wr-target", sv.wr_target, "target l(H^B) for bipartite B")->expected(2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "homalg: " << e.what() << '\n';
    return kInputError;
  }

  try {
    ctx.config = config_file.empty() ? RunConfig::from_environment() : RunConfig::from_file(config_file);
    if (oracle_cap) ctx.config.oracle_cap = *oracle_cap;
    if (power_cap) ctx.config.power_cap = *power_cap;
    if (iso_cap) ctx.config.iso_cap = *iso_cap;
    if (enum_cap) ctx.config.enum_cap = *enum_cap;
    if (threads) ctx.config.parallelism = *threads;
    if (seed) ctx.config.seed = *seed;
    ctx.config.validate();

    if (*hom_cmd) return cmd_hom(ctx, hom);
    if (*op_cmd) return cmd_op(ctx, op);
    if (*iso_cmd) return cmd_iso(ctx, iso_files);
    if (*check_cmd) return cmd_check(ctx, check);
    if (*cx_cmd) return cmd_counterexample(ctx, cx);
    if (*sv_cmd) return cmd_survey(ctx, sv);
  } catch (const std::exception& e) {
    err << "homalg: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kInternalError;
}

}  // namespace homalg::cli
