#include "pcm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "pcm/completion.hpp"
#include "pcm/error.hpp"
#include "pcm/graph.hpp"
#include "pcm/matrix_file.hpp"
#include "pcm/measures.hpp"
#include "pcm/reduction.hpp"

namespace pcm::cli {

namespace {

using Json = nlohmann::ordered_json;

// Report numbers carry 12 significant digits.
Json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_number(v));
}

Json one_based(const std::vector<std::size_t>& vertices) {
  Json out = Json::array();
  for (std::size_t v : vertices) out.push_back(v + 1);
  return out;
}

Json edge_json(const Edge& e) { return Json::array({e.a + 1, e.b + 1}); }

std::string edge_text(const Edge& e) { return "(" + std::to_string(e.a + 1) + "," + std::to_string(e.b + 1) + ")"; }

std::string cycle_text(const std::vector<std::size_t>& cycle) {
  std::string s;
  for (std::size_t v : cycle) s += (s.empty() ? "" : "-") + std::to_string(v + 1);
  return s;
}

Json interval_json(const FeasibleInterval& iv) {
  if (iv.unconstrained) return Json{{"unconstrained", true}};
  return Json{{"lo", num(iv.lo)},
              {"hi", num(iv.hi)},
              {"minimax", num(iv.minimax)},
              {"minimax_value", num(iv.minimax_value)},
              {"mt_context", num(iv.mt_context)}};
}

Json matrix_rows(const std::string& text) {
  Json rows = Json::array();
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  return rows;
}

struct Common {
  std::string file;
  bool json = false;
  Tolerances tol;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("file", common.file, "Matrix file")->required();
  cmd->add_flag("--json", common.json, "Write a machine-readable report");
  cmd->add_option("--tol-rec", common.tol.rec, "Reciprocity validation tolerance")->capture_default_str();
  cmd->add_option("--tol-cons", common.tol.cons, "Consistency tolerance")->capture_default_str();
  cmd->add_option("--tol-cmp", common.tol.cmp, "MT comparison tolerance")->capture_default_str();
}

struct Loaded {
  MatrixFile file;
  PartialMatrix matrix;
};

Loaded load(const Common& common) {
  common.tol.check();
  MatrixFile file = read_matrix_file(common.file);
  PartialMatrix matrix = PartialMatrix::validate(file.cells, common.tol);
  return {std::move(file), std::move(matrix)};
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::NonSquare:
    case ErrorCode::NonPositiveEntry:
    case ErrorCode::DiagonalNotOne:
    case ErrorCode::ReciprocityViolation:
    case ErrorCode::InvalidArgument:
    case ErrorCode::Incomplete:
    case ErrorCode::TooSmall:
      return true;
    default:
      return false;
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << contents;
}

// ---------------------------------------------------------------- check

int cmd_check(const Common& common, std::ostream& out) {
  const Loaded in = load(common);
  const PartialMatrix& m = in.matrix;
  const SpecGraph g = SpecGraph::from_matrix(m);

  Json components = Json::array();
  bool all_chordal = true;
  for (const auto& component : connected_components(g)) {
    const auto check = check_chordal(g.induced(component));
    Json c{{"vertices", one_based(component)}, {"chordal", check.chordal}};
    if (!check.chordal) {
      all_chordal = false;
      std::vector<std::size_t> cycle;
      for (std::size_t v : check.chordless_cycle) cycle.push_back(component[v]);
      c["chordless_cycle"] = one_based(normalize_cycle(cycle));
    }
    components.push_back(std::move(c));
  }
  const bool pcm = is_pcm(m, common.tol);
  const PcPlusResult plus = check_pc_plus(m, common.tol);
  const bool completable = (pcm && all_chordal) || plus.pc_plus;

  Json report{{"command", "check"},
              {"n", m.size()},
              {"reciprocal", true},
              {"unspecified_pairs", m.unspecified_pairs()},
              {"components", components},
              {"chordal", all_chordal},
              {"pcm", pcm},
              {"pc_plus", plus.pc_plus}};
  if (!plus.pc_plus) {
    report["pc_plus_witness"] = {{"edge", edge_json(*plus.violating_edge)},
                                 {"cycle", one_based(plus.cycle)},
                                 {"product", num(plus.cycle_product)}};
  }
  report["mt"] = num(mt(m));
  report["k"] = num(koczkodaj_index(m));
  report["consistent_completion"] = completable;

  if (common.json) {
    out << report.dump(2) << '\n';
  } else {
    out << "n: " << m.size() << "\n";
    out << "unspecified pairs: " << m.unspecified_pairs() << "\n";
    for (const auto& c : report["components"]) {
      out << "component " << c["vertices"].dump() << ": " << (c["chordal"].get<bool>() ? "chordal" : "not chordal");
      if (c.contains("chordless_cycle")) out << " (chordless cycle " << c["chordless_cycle"].dump() << ")";
      out << "\n";
    }
    out << "PCM: " << (pcm ? "yes" : "no") << "\n";
    out << "PC+: " << (plus.pc_plus ? "yes" : "no");
    if (!plus.pc_plus) {
      std::vector<std::size_t> cycle = plus.cycle;
      out << " (entry " << edge_text(*plus.violating_edge) << ", cycle " << cycle_text(cycle) << ", product "
          << format_number(plus.cycle_product) << ")";
    }
    out << "\n";
    out << "MT: " << format_number(mt(m)) << "\n";
    out << "K: " << format_number(koczkodaj_index(m)) << "\n";
    out << "consistent completion: " << (completable ? "yes" : "no") << "\n";
  }
  return completable ? kSuccess : kDomainNegative;
}

// -------------------------------------------------------------- measure

int cmd_measure(const Common& common, std::ostream& out) {
  const Loaded in = load(common);
  const PartialMatrix& m = in.matrix;
  const auto triads = specified_triads(m);
  const auto worst = max_triad(m);

  Json report{{"command", "measure"},
              {"n", m.size()},
              {"mt", num(mt(m))},
              {"k", num(koczkodaj_index(m))},
              {"triad_count", triads.size()}};
  if (worst) {
    report["max_triad"] = {{"cycle", one_based({worst->cycle.begin(), worst->cycle.end()})},
                           {"value", num(worst->value)}};
  } else {
    report["max_triad"] = nullptr;
  }

  if (common.json) {
    out << report.dump(2) << '\n';
  } else {
    out << "MT: " << format_number(mt(m)) << "\n";
    out << "K: " << format_number(koczkodaj_index(m)) << "\n";
    out << "specified triads: " << triads.size() << "\n";
    if (worst) {
      out << "max triad: c" << report["max_triad"]["cycle"].dump() << " = " << format_number(worst->value) << "\n";
    }
  }
  return kSuccess;
}

// ------------------------------------------------------------- complete

struct CompleteFlags {
  std::string mode = "auto";
  std::string selection = "minimax";
  std::string ordering = "descending";
  double join_k = 1.0;
  std::string join_cols = "1,1";
  std::string out_path;
  bool trace = false;
};

JoinOptions parse_join(const CompleteFlags& flags) {
  JoinOptions join;
  join.k = flags.join_k;
  const auto comma = flags.join_cols.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("comma");
    const long u = std::stol(flags.join_cols.substr(0, comma));
    const long v = std::stol(flags.join_cols.substr(comma + 1));
    if (u < 1 || v < 1) throw std::invalid_argument("range");
    join.u_col = static_cast<std::size_t>(u - 1);
    join.v_col = static_cast<std::size_t>(v - 1);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "--join-cols expects two positive integers 'i,j'");
  }
  if (!(std::isfinite(join.k) && join.k > 0.0)) throw Error(ErrorCode::InvalidArgument, "--join-k must be positive");
  return join;
}

Selection parse_selection(const std::string& s) {
  if (s == "midpoint") return Selection::Midpoint;
  if (s == "lo") return Selection::Lo;
  if (s == "hi") return Selection::Hi;
  return Selection::Minimax;
}

int cmd_complete(const Common& common, const CompleteFlags& flags, std::ostream& out) {
  const Loaded in = load(common);
  const PartialMatrix& m = in.matrix;
  if (m.unspecified_pairs() == 0) throw Error(ErrorCode::InvalidArgument, "matrix has no unspecified entries");

  const JoinOptions join = parse_join(flags);
  const OrderingRule rule = flags.ordering == "ascending" ? OrderingRule::Ascending : OrderingRule::Descending;
  const SpecGraph g = SpecGraph::from_matrix(m);
  bool all_chordal = true;
  for (const auto& component : connected_components(g)) all_chordal = all_chordal && is_chordal(g.induced(component));

  Json report{{"command", "complete"}, {"n", m.size()}};
  Json steps = Json::array();
  std::optional<ReciprocalMatrix> result;
  std::string method;

  const bool want_consistent = flags.mode == "consistent" || flags.mode == "auto";
  if (want_consistent && is_pcm(m, common.tol) && all_chordal) {
    method = "consistent-chordal";
    result = complete_consistent_chordal(m, common.tol, rule, join);
  } else if (want_consistent && is_pc_plus(m, common.tol)) {
    method = "consistent-pc-plus";
    result = complete_consistent_pc_plus(m, common.tol, join);
  } else if (flags.mode == "consistent") {
    const PcPlusResult plus = check_pc_plus(m, common.tol);
    throw Error(ErrorCode::NoConsistentCompletion,
                "cycle " + cycle_text(plus.cycle) + " has product " + format_number(plus.cycle_product), plus.cycle);
  } else {
    method = "mt-preserving";
    MtCompletionOptions options;
    options.selection = parse_selection(flags.selection);
    options.ordering = rule;
    options.join = join;
    CompletionReport completion = complete_mt_preserving(m, options, common.tol);
    for (const CompletionStep& s : completion.steps) {
      steps.push_back({{"entry", edge_json(s.edge)},
                       {"interval", interval_json(s.interval)},
                       {"value", num(s.value)},
                       {"mt_before", num(s.mt_before)},
                       {"mt_after", num(s.mt_after)}});
    }
    result = std::move(completion.result);
  }

  if (method != "mt-preserving") {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!m.specified(i, j)) steps.push_back({{"entry", {i + 1, j + 1}}, {"value", num((*result)(i, j))}});
      }
    }
  }

  const std::string text = write_matrix_text(result->partial(), &in.file);
  if (!flags.out_path.empty()) write_file(flags.out_path, text);

  report["method"] = method;
  if (method == "mt-preserving") report["selection"] = flags.selection;
  report["mt_input"] = num(mt(m));
  report["mt_result"] = num(mt(*result));
  report["consistent"] = is_consistent(*result, common.tol);
  if (flags.trace) report["steps"] = steps;
  report["matrix"] = matrix_rows(text);

  if (common.json || flags.trace) {
    out << report.dump(2) << '\n';
  } else {
    out << "method: " << method << "\n";
    out << "MT: " << format_number(mt(m)) << " -> " << format_number(mt(*result)) << "\n";
    if (flags.out_path.empty()) out << text;
  }
  return kSuccess;
}

// --------------------------------------------------------------- reduce

struct ReduceFlags {
  double target_mt = 1.0;
  std::size_t max_steps = 100;
  std::string edge = "best";
  std::string out_path;
  bool trace = false;
};

int cmd_reduce(const Common& common, const ReduceFlags& flags, std::ostream& out) {
  const Loaded in = load(common);
  const ReciprocalMatrix m(in.matrix);
  const EdgeRule rule = flags.edge == "outer" ? EdgeRule::OuterPair : EdgeRule::Best;
  const ReductionTrace trace = reduce(m, flags.target_mt, flags.max_steps, rule, common.tol);

  Json steps = Json::array();
  for (const ReductionStep& s : trace.steps) {
    steps.push_back({{"entry", edge_json(s.edge)},
                     {"old_value", num(s.old_value)},
                     {"new_value", num(s.new_value)},
                     {"interval", interval_json(s.interval)},
                     {"mt_before", num(s.mt_before)},
                     {"mt_after", num(s.mt_after)},
                     {"tie", s.tie}});
  }
  const std::string text = write_matrix_text(trace.result.partial(), &in.file);
  if (!flags.out_path.empty()) write_file(flags.out_path, text);
  const bool reached = trace.stop_reason == StopReason::TargetReached;

  Json report{{"command", "reduce"},
              {"n", m.size()},
              {"target_mt", num(flags.target_mt)},
              {"mt_input", num(mt(m))},
              {"mt_result", num(mt(trace.result))},
              {"step_count", trace.steps.size()},
              {"stop_reason", std::string(to_string(trace.stop_reason))}};
  if (flags.trace) report["steps"] = steps;
  report["matrix"] = matrix_rows(text);

  if (common.json || flags.trace) {
    out << report.dump(2) << '\n';
  } else {
    out << "MT: " << format_number(mt(m)) << " -> " << format_number(mt(trace.result)) << " in "
        << trace.steps.size() << " step(s)\n";
    out << "stop: " << to_string(trace.stop_reason) << "\n";
    if (flags.out_path.empty()) out << text;
  }
  return reached ? kSuccess : kDomainNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Completion and inconsistency reduction for pairwise comparison matrices", "pcm"};
  app.require_subcommand(1);

  Common check_common;
  auto* check = app.add_subcommand("check", "Classify a partial matrix and test for a consistent completion");
  add_common(check, check_common);

  Common measure_common;
  auto* measure = app.add_subcommand("measure", "Report MT, K and the maximal triad");
  add_common(measure, measure_common);

  Common complete_common;
  CompleteFlags complete_flags;
  auto* complete = app.add_subcommand("complete", "Fill the unspecified entries");
  add_common(complete, complete_common);
  complete->add_option("--mode", complete_flags.mode, "consistent, mt-preserving or auto")
      ->check(CLI::IsMember({"consistent", "mt-preserving", "auto"}))
      ->capture_default_str();
  complete->add_option("--selection", complete_flags.selection, "Value chosen inside each feasible interval")
      ->check(CLI::IsMember({"minimax", "midpoint", "lo", "hi"}))
      ->capture_default_str();
  complete->add_option("--ordering", complete_flags.ordering, "Scan direction of the chordal fill")
      ->check(CLI::IsMember({"descending", "ascending"}))
      ->capture_default_str();
  complete->add_option("--join-k", complete_flags.join_k, "Scale of cross-component blocks")->capture_default_str();
  complete->add_option("--join-cols", complete_flags.join_cols, "Block columns 'i,j' used for cross-component blocks")
      ->capture_default_str();
  complete->add_option("--out", complete_flags.out_path, "Write the completed matrix here");
  complete->add_flag("--trace", complete_flags.trace, "Report every filled entry (implies --json)");

  Common reduce_common;
  ReduceFlags reduce_flags;
  auto* reduce_cmd = app.add_subcommand("reduce", "Lower MT of a complete matrix by re-solving single entries");
  add_common(reduce_cmd, reduce_common);
  reduce_cmd->add_option("--target-mt", reduce_flags.target_mt, "Stop once MT is at most this")
      ->check(CLI::Range(1.0, std::numeric_limits<double>::max()))
      ->capture_default_str();
  reduce_cmd->add_option("--max-steps", reduce_flags.max_steps, "Step budget")->capture_default_str();
  reduce_cmd->add_option("--edge", reduce_flags.edge, "best: try all three entries of the worst triad; outer: only the one joining the outer indices")
      ->check(CLI::IsMember({"best", "outer"}))
      ->capture_default_str();
  reduce_cmd->add_option("--out", reduce_flags.out_path, "Write the reduced matrix here");
  reduce_cmd->add_flag("--trace", reduce_flags.trace, "Report every step (implies --json)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const Common* active = nullptr;
  std::string command;
  if (check->parsed()) active = &check_common, command = "check";
  if (measure->parsed()) active = &measure_common, command = "measure";
  if (complete->parsed()) active = &complete_common, command = "complete";
  if (reduce_cmd->parsed()) active = &reduce_common, command = "reduce";

  try {
    if (command == "check") return cmd_check(check_common, out);
    if (command == "measure") return cmd_measure(measure_common, out);
    if (command == "complete") return cmd_complete(complete_common, complete_flags, out);
    return cmd_reduce(reduce_common, reduce_flags, out);
  } catch (const Error& e) {
    const bool input = is_input_error(e.code());
    if (active->json || (command == "complete" && complete_flags.trace) || (command == "reduce" && reduce_flags.trace)) {
      out << Json{{"command", command},
                  {"error", std::string(to_string(e.code()))},
                  {"message", e.what()},
                  {"witness", one_based(e.witness())}}
                 .dump(2)
          << '\n';
    }
    err << "error: " << e.what();
    if (!e.witness().empty()) err << " [" << cycle_text(e.witness()) << "]";
    err << "\n";
    return input ? kUsageError : kDomainNegative;
  }
}

}  // namespace pcm::cli
