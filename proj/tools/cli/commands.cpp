#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "cli/run_report.hpp"
#include "cli/verify.hpp"
#include "phylocompat/character_compat.hpp"
#include "phylocompat/constructions.hpp"
#include "phylocompat/errors.hpp"
#include "phylocompat/formats.hpp"
#include "phylocompat/newick.hpp"
#include "phylocompat/quartet_compat.hpp"
#include "phylocompat/quartet_graph.hpp"
#include "phylocompat/triplet_compat.hpp"

namespace phylocompat::cli {

namespace {

struct ReportFlags {
  std::string format = "kv";
  bool deterministic = false;

  ReportFormat parsed() const { return format == "text" ? ReportFormat::text : ReportFormat::key_value; }
};

void add_report_flags(CLI::App* cmd, ReportFlags& flags) {
  cmd->add_option("--format", flags.format, "Report layout: kv (key=value lines) or text")
      ->check(CLI::IsMember({"kv", "text"}));
  cmd->add_flag("--deterministic", flags.deterministic, "Leave out timing so reports are byte-identical");
}

std::string echo(int argc, const char* const* argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- gen -------------------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::size_t s = 0, t = 0, n = 0, r = 0;
  std::string ell = "a2";
  std::string from;
  std::string output;
};

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  Taxa taxa;
  std::string text;
  std::size_t count = 0;
  std::string noun;
  auto take = [&](const auto& items, const char* what) {
    text = format_lines(std::span(items), taxa);
    count = items.size();
    noun = what;
  };
  if (args.kind == "qst") {
    take(gen_qst(taxa, args.s, args.t), "quartets");
  } else if (args.kind == "theorem3") {
    take(gen_minimal_incompatible_quartets(taxa, args.n), "quartets");
  } else if (args.kind == "theorem5") {
    take(gen_minimal_incompatible_characters(taxa, args.r), "characters");
  } else if (args.kind == "rr") {
    take(gen_cyclic_triplets(taxa, args.r), "triplets");
  } else if (args.kind == "corollary3") {
    take(gen_tight_triplets(taxa, args.n, args.ell == "a1" ? SharedLabel::a1 : SharedLabel::a2), "triplets");
  } else {
    take(c_of_q(parse_quartets(read_text_file(args.from), taxa)), "characters");
  }
  if (args.output.empty()) {
    out << text;
    err << count << ' ' << noun << '\n';
  } else {
    write_text_file(args.output, text);
    out << "wrote " << count << ' ' << noun << " to " << args.output << '\n';
  }
  return kExitCompatible;
}

// ---- check -----------------------------------------------------------------------------

struct CheckArgs {
  std::string kind;
  std::string method;
  std::string input;
  std::optional<std::size_t> max_labels;
  bool minimality = false;
  ReportFlags report;
};

template <class Item>
void add_certificate(RunReport& report, const std::optional<std::vector<Item>>& certificate, const Taxa& taxa) {
  if (!certificate) return;
  for (const auto& item : *certificate) {
    if constexpr (std::is_same_v<Item, Quartet>) {
      report.add("certificate", format_quartet(item, taxa));
    } else if constexpr (std::is_same_v<Item, Triplet>) {
      report.add("certificate", format_triplet(item, taxa));
    } else {
      report.add("certificate", format_character(item, taxa));
    }
  }
}

void add_minimality(RunReport& report, const MinimalityReport& m) {
  report.add("minimal", m.minimal() ? "true" : "false");
  std::string indices;
  for (std::size_t i : m.incompatible_without) {
    if (!indices.empty()) indices += ',';
    indices += std::to_string(i + 1);
  }
  if (!indices.empty()) report.add("incompatible_without", indices);
}

int cmd_check(const CheckArgs& args, const std::string& command, std::ostream& out) {
  Taxa taxa;
  const std::string text = read_text_file(args.input);
  RunReport report(command);
  report.add("kind", args.kind);
  report.add("method", args.method);
  report.add("input", args.input);
  const auto start = std::chrono::steady_clock::now();
  Verdict verdict = Verdict::incompatible;

  if (args.kind == "quartets") {
    const auto q = parse_quartets(text, taxa);
    const QuartetMethod method = args.method == "unification" ? QuartetMethod::unification : QuartetMethod::brute;
    const BruteOptions options{args.max_labels.value_or(kDefaultUnrootedCap)};
    report.add("items", std::to_string(q.size()));
    report.add("labels", std::to_string(label_set(q).size()));
    const auto result = compat_quartets(q, method, options);
    verdict = result.verdict;
    report.add("verdict", std::string(to_string(verdict)));
    if (result.witness) report.add("witness", serialize_newick(*result.witness, taxa));
    add_certificate(report, result.certificate, taxa);
    if (args.minimality) add_minimality(report, is_minimally_incompatible_quartets(q, method, options));
  } else if (args.kind == "characters") {
    const auto c = parse_characters(text, taxa);
    const BruteOptions options{args.max_labels.value_or(kDefaultUnrootedCap)};
    report.add("items", std::to_string(c.size()));
    report.add("labels", std::to_string(c.empty() ? 0 : c.front().universe().size()));
    const auto result = compat_characters_brute(c, options);
    verdict = result.verdict;
    report.add("verdict", std::string(to_string(verdict)));
    if (result.witness) report.add("witness", serialize_newick(*result.witness, taxa));
    add_certificate(report, result.certificate, taxa);
    if (args.minimality) add_minimality(report, is_minimally_incompatible_characters(c, options));
  } else {
    const auto r = parse_triplets(text, taxa);
    report.add("items", std::to_string(r.size()));
    report.add("labels", std::to_string(label_set(r).size()));
    TripletReport result;
    TripletMethod method = TripletMethod::build;
    BruteOptions options{args.max_labels.value_or(kDefaultRootedCap)};
    if (args.method == "subset-sweep") {
      method = TripletMethod::subset_sweep;
      result = compat_triplets_subset_sweep(r, args.max_labels.value_or(12));
    } else if (args.method == "brute") {
      method = TripletMethod::brute;
      result = compat_triplets_brute(r, options);
    } else {
      result = build_compat(r);
    }
    verdict = result.verdict;
    report.add("verdict", std::string(to_string(verdict)));
    if (result.witness) report.add("witness", serialize_newick(*result.witness, taxa));
    add_certificate(report, result.certificate, taxa);
    if (args.minimality) add_minimality(report, is_minimally_incompatible_triplets(r, method, options));
  }
  report.set_seconds(seconds_since(start));
  out << report.render(args.report.parsed(), args.report.deterministic);
  return verdict == Verdict::compatible ? kExitCompatible : kExitIncompatible;
}

// ---- verify ----------------------------------------------------------------------------

int cmd_verify(const std::string& suite, const VerifyParams& params, const ReportFlags& flags,
               const std::string& command, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport result = run_verification(suite, params);
  RunReport report(command);
  report.add("suite", result.name);
  std::size_t failed = 0;
  for (const auto& c : result.cases) {
    report.add("case", c.instance + ": " + (c.pass ? "pass" : "FAIL") + " (" + c.detail + ")");
    if (!c.pass) ++failed;
  }
  report.add("cases", std::to_string(result.cases.size()));
  report.add("failed", std::to_string(failed));
  report.add("verdict", result.passed() ? "pass" : "fail");
  report.set_seconds(seconds_since(start));
  out << report.render(flags.parsed(), flags.deterministic);
  return result.passed() ? kExitCompatible : kExitIncompatible;
}

// ---- export-dot ------------------------------------------------------------------------

int cmd_export_dot(const std::string& input, const std::string& output, std::ostream& out) {
  Taxa taxa;
  const auto q = parse_quartets(read_text_file(input), taxa);
  const std::string dot = to_dot(QuartetGraph(q), taxa);
  if (output.empty()) {
    out << dot;
  } else {
    write_text_file(output, dot);
  }
  return kExitCompatible;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compatibility checks and extremal constructions for quartets, characters and triplets",
               "phylocompat"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a constraint family");
  gen_cmd->require_subcommand(1);
  gen_cmd->add_option("-o,--output", gen.output, "Write to this file instead of stdout");
  auto* qst = gen_cmd->add_subcommand("qst", "Quartet family Q(s,t)");
  qst->add_option("--s", gen.s, "Number of a-labels (>= 2)")->required();
  qst->add_option("--t", gen.t, "Number of b-labels (>= 2)")->required();
  auto* th3 = gen_cmd->add_subcommand("theorem3", "Minimally incompatible quartets on n labels");
  th3->add_option("--n", gen.n, "Number of labels (>= 4)")->required();
  auto* th5 = gen_cmd->add_subcommand("theorem5", "Minimally incompatible r-state characters");
  th5->add_option("--r", gen.r, "Maximum number of states (>= 2)")->required();
  auto* rr = gen_cmd->add_subcommand("rr", "Cyclic triplet family R_r");
  rr->add_option("--r", gen.r, "Number of triplets (>= 2)")->required();
  auto* cor3 = gen_cmd->add_subcommand("corollary3", "n-1 minimally incompatible triplets on n labels");
  cor3->add_option("--n", gen.n, "Number of labels (>= 3)")->required();
  cor3->add_option("--ell", gen.ell, "Label of Q(2,n-1) removed by the mapping")->check(CLI::IsMember({"a1", "a2"}));
  auto* cq = gen_cmd->add_subcommand("cq", "Characters of a quartet file");
  cq->add_option("--from", gen.from, "Quartet file")->required();
  for (auto* sub : gen_cmd->get_subcommands({})) {
    sub->add_option("-o,--output", gen.output, "Write to this file instead of stdout");
  }

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide compatibility of a constraint file");
  check_cmd->require_subcommand(1);
  const std::vector<std::tuple<std::string, std::string, std::vector<std::string>>> kinds{
      {"quartets", "brute", {"brute", "unification"}},
      {"characters", "brute", {"brute"}},
      {"triplets", "build", {"build", "subset-sweep", "brute"}},
  };
  for (const auto& [kind, fallback, methods] : kinds) {
    auto* sub = check_cmd->add_subcommand(kind, "Check a " + kind.substr(0, kind.size() - 1) + " file");
    sub->add_option("--method", check.method, "Decision method")->check(CLI::IsMember(methods));
    sub->add_option("--max-labels", check.max_labels, "Label cap for exhaustive methods");
    sub->add_flag("--minimality", check.minimality, "Also test whether every proper subset is compatible");
    sub->add_option("input", check.input, "Input file")->required();
    add_report_flags(sub, check.report);
  }

  std::string suite;
  VerifyParams params;
  ReportFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(verify_names()));
  verify_cmd->add_option("--n-max", params.n_max, "Largest label count");
  verify_cmd->add_option("--max", params.max, "Largest s and t");
  verify_cmd->add_option("--r-max", params.r_max, "Largest r");
  verify_cmd->add_option("--samples", params.samples, "Number of random instances");
  verify_cmd->add_option("--seed", params.seed, "Random seed");
  verify_cmd->add_option("--max-labels", params.max_labels, "Label cap for random or exhaustive instances");
  add_report_flags(verify_cmd, verify_flags);

  std::string dot_input, dot_output;
  auto* dot_cmd = app.add_subcommand("export-dot", "Write the quartet graph of a quartet file as DOT");
  dot_cmd->add_option("input", dot_input, "Quartet file")->required();
  dot_cmd->add_option("-o,--output", dot_output, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitCompatible : kExitError;
  }

  const std::string command = echo(argc, argv);
  try {
    if (gen_cmd->parsed()) {
      gen.kind = gen_cmd->get_subcommands().front()->get_name();
      return cmd_gen(gen, out, err);
    }
    if (check_cmd->parsed()) {
      auto* sub = check_cmd->get_subcommands().front();
      check.kind = sub->get_name();
      if (check.method.empty()) {
        for (const auto& [kind, fallback, methods] : kinds) {
          if (kind == check.kind) check.method = fallback;
        }
      }
      return cmd_check(check, command, out);
    }
    if (verify_cmd->parsed()) return cmd_verify(suite, params, verify_flags, command, out);
    return cmd_export_dot(dot_input, dot_output, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace phylocompat::cli
