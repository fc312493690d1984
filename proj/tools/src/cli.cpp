#include "stix_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stix/digraph.hpp"
#include "stix/extremal.hpp"
#include "stix/io.hpp"
#include "stix/search.hpp"
#include "stix/stable_index.hpp"
#include "stix/verify.hpp"

namespace stix::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Bad flag values discovered after CLI11 has accepted the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json make_report(const std::string& command, json inputs, json outcome, double elapsed) {
  json r;
  r["schema_version"] = kSchemaVersion;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["outcome"] = std::move(outcome);
  r["timing"] = {{"elapsed_seconds", elapsed}};
  r["tool_version"] = kToolVersion;
  return r;
}

std::string spec_label(const GlassesSpec& s) {
  std::ostringstream os;
  if (s.k == 2)
    os << "g(" << s.p << "," << s.q << ")";
  else
    os << "g(" << s.p << "," << s.k << "," << s.q << ")";
  return os.str();
}

json spec_json(const GlassesSpec& s) {
  return {{"p", s.p}, {"k", s.k}, {"q", s.q}, {"label", spec_label(s)}};
}

BoolMatrix load_matrix(const std::string& path, const std::string& format) {
  if (format == "edges") return to_matrix(read_edge_list_file(path));
  return read_matrix_file(path);
}

HorizonPolicy parse_policy(const std::string& text) {
  if (text == "bound") return HorizonPolicy::theorem_bound();
  if (text == "cycle") return HorizonPolicy::cycle_detect();
  if (text.rfind("cap:", 0) == 0) {
    const std::string_view digits = std::string_view(text).substr(4);
    std::int64_t cap = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cap);
    if (!digits.empty() && ec == std::errc{} && ptr == digits.data() + digits.size() && cap >= 1)
      return HorizonPolicy::explicit_cap(cap);
  }
  throw UsageError("--policy must be bound, cycle or cap:<k> with k >= 1, got '" + text + "'");
}

json outcome_json(const StableIndexOutcome& outcome) {
  if (const auto* f = std::get_if<FiniteIndex>(&outcome)) {
    return {{"kind", "finite"},
            {"theta", f->theta},
            {"witness", {f->witness.first + 1, f->witness.second + 1}}};
  }
  const auto& inf = std::get<InfiniteIndex>(outcome);
  json cert;
  if (const auto* pc = std::get_if<PowerCycle>(&inf.certificate))
    cert = {{"type", "power-cycle"}, {"a", pc->first}, {"b", pc->second}};
  else
    cert = {{"type", "bound-exceeded"}, {"horizon", std::get<BoundExceeded>(inf.certificate).horizon}};
  return {{"kind", "infinite"}, {"certificate", cert}};
}

std::string outcome_text(const StableIndexOutcome& outcome) {
  std::ostringstream os;
  if (const auto* f = std::get_if<FiniteIndex>(&outcome)) {
    os << "finite theta=" << f->theta << " witness=(" << f->witness.first + 1 << ","
       << f->witness.second + 1 << ")";
    return os.str();
  }
  const auto& inf = std::get<InfiniteIndex>(outcome);
  if (const auto* pc = std::get_if<PowerCycle>(&inf.certificate))
    os << "infinite certificate=power-cycle a=" << pc->first << " b=" << pc->second;
  else
    os << "infinite certificate=bound-exceeded horizon=" << std::get<BoundExceeded>(inf.certificate).horizon;
  return os.str();
}

// ---------------------------------------------------------------------------

struct ThetaArgs {
  std::string file;
  std::string policy = "bound";
  std::string format = "matrix";
  bool json = false;
};

int cmd_theta(const ThetaArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const HorizonPolicy policy = parse_policy(a.policy);
  const BoolMatrix m = load_matrix(a.file, a.format);
  const StableIndexOutcome outcome = stable_index(m, policy);
  if (a.json) {
    json inputs = {{"file", a.file}, {"format", a.format}, {"policy", a.policy}, {"order", m.order()}};
    out << make_report("theta", inputs, outcome_json(outcome), seconds_since(start)).dump(2) << '\n';
  } else {
    out << outcome_text(outcome) << '\n';
  }
  return kSuccess;
}

struct ConstructArgs {
  std::string kind;
  std::vector<long long> params;
  std::string out_file;
  std::string format = "matrix";
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  for (auto v : a.params)
    if (v < 1) throw UsageError("construct: parameters must be positive integers");
  auto param = [&](std::size_t i) { return static_cast<std::size_t>(a.params[i]); };

  BoolMatrix m(1);
  Digraph d(1);
  std::vector<std::string> comments;
  if (a.kind == "glasses") {
    if (a.params.size() != 3) throw UsageError("construct glasses needs three parameters: p k q");
    if (param(1) < 2) throw UsageError("construct glasses: path length k must be at least 2");
    auto g = build_glasses(param(0), param(1), param(2));
    d = g.digraph;
    m = to_matrix(d);
    comments.push_back("glasses " + spec_label(g.spec) + ", " + std::to_string(g.spec.vertex_count()) +
                       " vertices, " + std::to_string(g.spec.arc_count()) + " arcs");
  } else if (a.kind == "circulant") {
    if (a.params.size() != 1) throw UsageError("construct circulant needs one parameter: n");
    m = circulant(param(0));
    d = from_matrix(m);
    comments.push_back("circulant C_" + std::to_string(param(0)));
  } else {
    throw UsageError("construct: kind must be glasses or circulant, got '" + a.kind + "'");
  }

  auto emit = [&](std::ostream& os) {
    if (a.format == "edges")
      write_edge_list(os, d);
    else
      write_matrix(os, m, comments);
  };
  if (a.out_file.empty()) {
    emit(out);
  } else {
    std::ofstream f(a.out_file);
    if (!f) throw UsageError("cannot write " + a.out_file);
    emit(f);
    if (!f) throw UsageError("write failed: " + a.out_file);
  }
  return kSuccess;
}

struct BoundArgs {
  std::optional<long long> n;
  bool table = false;
  bool json = false;
};

json bound_json(std::int64_t n) {
  json o = {{"n", n}, {"s", max_finite_theta(n)}};
  if (n >= 7) {
    const auto [p, q] = extremal_pair(n);
    const auto census = extremal_census(n);
    o["g"] = g_of(n);
    o["case"] = residue_case(n);
    o["extremal_pair"] = {p, q};
    json fam = json::array();
    for (const auto& s : census.family) fam.push_back(spec_json(s));
    o["census"] = fam;
  } else {
    o["s_source"] = "table";
    o["g_formula_value"] = g_of(n);
    o["g_applicable"] = false;
  }
  return o;
}

void bound_text(std::int64_t n, std::ostream& out) {
  out << "n=" << n << '\n';
  if (n < 7) {
    out << "s=" << max_finite_theta(n) << " (table)\n";
    out << "g-formula value " << g_of(n) << " (" << residue_case(n) << ") not applicable below n=7\n";
    return;
  }
  const auto [p, q] = extremal_pair(n);
  const auto census = extremal_census(n);
  out << "g=" << g_of(n) << " (case: " << residue_case(n) << ")\n";
  out << "s=" << max_finite_theta(n) << '\n';
  out << "extremal pair={" << p << "," << q << "}\n";
  out << "census: " << census.family.size() << " digraphs up to isomorphism:";
  for (std::size_t i = 0; i < census.family.size(); ++i)
    out << (i == 0 ? " " : ", ") << spec_label(census.family[i]);
  out << '\n';
}

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  if (!a.n && !a.table) throw UsageError("bound: give n, --table, or both");
  if (a.n && *a.n < 2) throw UsageError("bound: n must be at least 2");
  if (a.json) {
    json outcome;
    if (a.n) outcome = bound_json(*a.n);
    if (a.table) {
      json t = json::array();
      for (int n = 2; n <= 6; ++n) t.push_back({n, max_finite_theta(n)});
      outcome["table"] = t;
    }
    json inputs = {{"table", a.table}};
    if (a.n) inputs["n"] = *a.n;
    out << make_report("bound", inputs, outcome, 0.0).dump(2) << '\n';
    return kSuccess;
  }
  if (a.table) {
    out << "n s(n)\n";
    for (int n = 2; n <= 6; ++n) out << n << ' ' << max_finite_theta(n) << '\n';
  }
  if (a.n) bound_text(*a.n, out);
  return kSuccess;
}

struct SearchArgs {
  int n = 0;
  std::uint64_t shards = 1;
  std::optional<std::uint64_t> shard_index;
  std::string resume_dir;
  std::string report_file;
  bool allow_n6 = false;
  unsigned threads = 0;
  bool json = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  SearchOptions options;
  options.threads = a.threads;
  options.allow_n6 = a.allow_n6;
  std::optional<std::filesystem::path> resume;
  if (!a.resume_dir.empty()) resume = a.resume_dir;
  const SearchReport report = run_search(a.n, a.shards, options, resume, a.shard_index);

  if (!a.report_file.empty()) {
    std::ofstream f(a.report_file);
    if (!f) throw UsageError("cannot write " + a.report_file);
    f << to_json(report) << '\n';
  }
  if (a.json) {
    json inputs = {{"n", a.n}, {"shards", a.shards}, {"allow_n6", a.allow_n6}};
    if (a.shard_index) inputs["shard_index"] = *a.shard_index;
    if (resume) inputs["resume_dir"] = a.resume_dir;
    json outcome = json::parse(to_json(report));
    outcome["shards_included"] = report.shards;
    out << make_report("search", inputs, outcome, report.elapsed_seconds).dump(2) << '\n';
    return kSuccess;
  }
  out << "n=" << a.n << " s=" << report.s_value << '\n';
  out << "scanned=" << report.matrices_scanned << " infinite=" << report.infinite_count << '\n';
  out << "theta histogram:";
  for (const auto& [t, c] : report.theta_histogram) out << ' ' << t << ':' << c;
  out << '\n';
  out << "extremal classes=" << report.extremal_matrices.size() << '\n';
  for (const auto& m : report.extremal_matrices) {
    const auto rows = m.to_strings();
    out << " ";
    for (const auto& r : rows) out << ' ' << r;
    out << '\n';
  }
  out << "shards=" << report.shards.size() << "/" << report.shard_count;
  if (report.shards.size() < report.shard_count) out << " (partial)";
  out << '\n';
  out << "elapsed=" << std::fixed << std::setprecision(3) << report.elapsed_seconds << "s\n";
  out.unsetf(std::ios::floatfield);
  return kSuccess;
}

struct VerifyArgs {
  std::string suite;
  std::optional<int> max;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  bool json = false;
};

std::vector<LemmaReport> run_suite(const VerifyArgs& a) {
  VerifyOptions opts;
  opts.threads = a.threads;
  if (a.seed) opts.seed = *a.seed;
  auto max_or = [&](int d) { return a.max.value_or(d); };
  auto trials_or = [&](std::uint64_t d) { return a.trials.value_or(d); };
  std::vector<LemmaReport> r;

  if (a.suite == "all") {
    if (a.max || a.trials) throw UsageError("verify all runs fixed default ranges; drop --max/--trials");
    return verify_all(opts);
  }
  if (a.suite == "lemma3") {
    if (max_or(8) < 1) throw UsageError("--max must be at least 1");
    r.push_back(verify_lemma3_range(max_or(8), opts));
  } else if (a.suite == "lemma8") {
    if (max_or(8) < 2) throw UsageError("--max must be at least 2");
    for (int n = 2; n <= max_or(8); ++n) r.push_back(verify_lemma8(n, trials_or(10000), opts));
  } else if (a.suite == "eq3") {
    if (max_or(8) < 2) throw UsageError("--max must be at least 2");
    r.push_back(verify_eq3(max_or(8), max_or(8), 5, opts));
  } else if (a.suite == "lemma4") {
    if (max_or(12) < 7) throw UsageError("--max must be at least 7");
    for (int n = 7; n <= max_or(12); ++n) {
      const auto [p, q] = extremal_pair(n);
      r.push_back(verify_lemma4(static_cast<int>(p), static_cast<int>(q), PositionCoverage::Sample, opts));
      r.push_back(verify_lemma4(static_cast<int>(q), static_cast<int>(p), PositionCoverage::Sample, opts));
    }
  } else if (a.suite == "lemma5") {
    if (max_or(100) < 7) throw UsageError("--max must be at least 7");
    r.push_back(verify_lemma5(max_or(100)));
  } else if (a.suite == "theorem1") {
    if (max_or(24) < 7 || max_or(24) > 24) throw UsageError("--max must lie in 7..24");
    r.push_back(verify_theorem1(max_or(24), opts));
  } else if (a.suite == "lemma1") {
    if (max_or(6) < 2 || max_or(6) > 8) throw UsageError("--max must lie in 2..8");
    r.push_back(verify_lemma1(trials_or(100000), max_or(6), opts));
  } else if (a.suite == "spectral") {
    if (max_or(10) < 2) throw UsageError("--max must be at least 2");
    r.push_back(verify_spectral_bound(trials_or(1000), max_or(10), 1e-6, opts));
  } else if (a.suite == "lemma9") {
    if (max_or(8) < 7) throw UsageError("--max must be at least 7");
    r.push_back(verify_lemma9_augmentations(max_or(8), opts));
  } else {
    throw UsageError("unknown suite '" + a.suite + "'");
  }
  return r;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const auto reports = run_suite(a);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (a.json) {
    json arr = json::array();
    for (const auto& r : reports)
      arr.push_back({{"id", r.lemma_id},
                     {"range", r.parameter_range},
                     {"cases", r.cases_checked},
                     {"passed", r.passed()},
                     {"failures", r.failures},
                     {"notes", r.notes}});
    json inputs = {{"suite", a.suite}};
    if (a.max) inputs["max"] = *a.max;
    if (a.trials) inputs["trials"] = *a.trials;
    if (a.seed) inputs["seed"] = *a.seed;
    out << make_report("verify", inputs, {{"passed", ok}, {"reports", arr}}, seconds_since(start)).dump(2)
        << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.lemma_id << " [" << r.parameter_range << "] "
          << r.cases_checked << " cases\n";
      for (const auto& note : r.notes) out << "  note: " << note << '\n';
      for (const auto& f : r.failures) out << "  counterexample: " << f << '\n';
    }
    out << (ok ? "all passed" : "FAILED") << " (" << reports.size() << " reports, " << std::fixed
        << std::setprecision(2) << seconds_since(start) << "s)\n";
    out.unsetf(std::ios::floatfield);
  }
  return ok ? kSuccess : kVerificationFailure;
}

struct ClassifyArgs {
  std::string file;
  std::string format = "matrix";
  bool json = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const BoolMatrix m = load_matrix(a.file, a.format);
  const std::size_t n = m.order();
  if (n < 7) throw UsageError("classify needs order >= 7, file has order " + std::to_string(n));
  const ExtremalReport rep = classify_extremal(m);

  if (a.json) {
    json outcome = {{"theta", rep.theta ? json(*rep.theta) : json("infinite")},
                    {"g", rep.g_value},
                    {"extremal", rep.is_extremal},
                    {"matched_spec", rep.matched_spec ? spec_json(*rep.matched_spec) : json(nullptr)},
                    {"note", rep.note}};
    json inputs = {{"file", a.file}, {"format", a.format}, {"order", n}};
    out << make_report("classify", inputs, outcome, seconds_since(start)).dump(2) << '\n';
    return kSuccess;
  }
  if (!rep.theta) {
    out << "theta infinite, not extremal\n";
  } else if (rep.is_extremal) {
    out << "theta=" << *rep.theta << " = g(" << n << ")=" << rep.g_value << '\n';
    out << "extremal: yes, spec " << spec_label(*rep.matched_spec) << '\n';
  } else {
    out << "theta=" << *rep.theta << " < g(" << n << ")=" << rep.g_value << ", not extremal\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable index of 0-1 matrices", "stix"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  const std::vector<std::string> formats{"matrix", "edges"};

  ThetaArgs theta;
  auto* theta_cmd = app.add_subcommand("theta", "Stable index of a matrix file");
  theta_cmd->add_option("file", theta.file, "Matrix or edge-list file")->required();
  theta_cmd->add_option("--policy", theta.policy, "bound | cycle | cap:<k>");
  theta_cmd->add_option("--format", theta.format, "Input format")->check(CLI::IsMember(formats));
  theta_cmd->add_flag("--json", theta.json, "Emit a JSON report");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Write glasses p k q or circulant n");
  construct_cmd->add_option("kind", construct.kind, "glasses | circulant")->required();
  construct_cmd->add_option("params", construct.params, "Integer parameters")->required();
  construct_cmd->add_option("--out", construct.out_file, "Output file (default stdout)");
  construct_cmd->add_option("--format", construct.format, "Output format")->check(CLI::IsMember(formats));

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Maximum finite stable index at order n");
  bound_cmd->add_option("n", bound.n, "Order");
  bound_cmd->add_flag("--table", bound.table, "Print the n = 2..6 table");
  bound_cmd->add_flag("--json", bound.json, "Emit a JSON report");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search over all n x n 0-1 matrices");
  search_cmd->add_option("n", search.n, "Order, 2..6")->required();
  search_cmd->add_option("--shards", search.shards, "Number of shards")->check(CLI::PositiveNumber);
  search_cmd->add_option("--shard-index", search.shard_index, "Run only this shard (0-based)");
  search_cmd->add_option("--resume-dir", search.resume_dir, "Checkpoint directory");
  search_cmd->add_option("--report", search.report_file, "Write the deterministic JSON payload here");
  search_cmd->add_flag("--allow-n6", search.allow_n6, "Permit the n = 6 long run");
  search_cmd->add_option("--threads", search.threads, "Worker threads (default: all cores)");
  search_cmd->add_flag("--json", search.json, "Emit a JSON report");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run computational checks");
  verify_cmd
      ->add_option("suite", verify.suite,
                   "lemma3 | lemma8 | eq3 | lemma4 | lemma5 | theorem1 | lemma1 | spectral | lemma9 | all")
      ->required();
  verify_cmd->add_option("--max", verify.max, "Upper end of the suite's range");
  verify_cmd->add_option("--trials", verify.trials, "Random trials");
  verify_cmd->add_option("--seed", verify.seed, "Seed for random suites");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (default: all cores)");
  verify_cmd->add_flag("--json", verify.json, "Emit a JSON report");

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand("classify", "Extremality verdict for order >= 7");
  classify_cmd->add_option("file", classify.file, "Matrix or edge-list file")->required();
  classify_cmd->add_option("--format", classify.format, "Input format")->check(CLI::IsMember(formats));
  classify_cmd->add_flag("--json", classify.json, "Emit a JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {  // --help, --version
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (theta_cmd->parsed()) return cmd_theta(theta, out);
    if (construct_cmd->parsed()) return cmd_construct(construct, out);
    if (bound_cmd->parsed()) return cmd_bound(bound, out);
    if (search_cmd->parsed()) return cmd_search(search, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (classify_cmd->parsed()) return cmd_classify(classify, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const ExtremalInconsistency& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace stix::cli
