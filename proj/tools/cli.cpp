#include "cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "wqo/random.hpp"
#include "wqo/report.hpp"
#include "wqo/text.hpp"
#include "wqo/transform.hpp"

namespace wqo::cli {

namespace {

constexpr const char* kGrammar = R"(Grammars:
  spec     fin:<k> | omega | omega+(<spec>)
  element  w.<n> | y.<element>   (bare <n> means w.<n>)
  term     <element> at height 0, else [<term>,...]; [] is the empty sequence
  node     comma-separated naturals, e.g. 1,3,7
  pair     <s>,|<t> for s triangle t, e.g. 0,|1 or 1,3,|3,7
  qorder   <spec> | term(<n>,<spec>) | prod(<k>,<qorder>) | seq(<qorder>)
           | fqo(<size>;<a>-<b>,...)
  product  (<c0>,...,<ck-1>;<tail>)
)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_count(const std::vector<std::string>& xs, std::size_t n, const char* what) {
  if (xs.size() != n) {
    throw UsageError(std::string("expected ") + std::to_string(n) + " " + what + ", got " +
                     std::to_string(xs.size()));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read --input " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct ReportFlags {
  std::string report_path;
  std::string format = "text";
  std::string tables_path;
  unsigned jobs = 1;
  bool timings = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--report", report_path,
                    "Write the report here (.json selects JSON) instead of stdout");
    cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "structured", "json"}));
    cmd->add_option("--tables", tables_path, "Write every level table to this file");
    cmd->add_option("--jobs", jobs, "Worker threads for goodness scans")
        ->check(CLI::Range(1u, 256u));
    cmd->add_flag("--timings", timings, "Include per-level timings in text/json reports");
  }
};

int emit_pipeline(const DescendingSequence& ds, const std::string& source, const ReportFlags& f,
                  std::ostream& out) {
  PipelineOptions options;
  options.jobs = f.jobs;
  options.source = source;
  const WitnessReport report = run_pipeline(ds, options);

  std::string format = f.format;
  if (f.report_path.size() >= 5 &&
      f.report_path.compare(f.report_path.size() - 5, 5, ".json") == 0) {
    format = "json";
  }
  std::string text;
  if (format == "json") {
    text = format_report_json(report, f.timings);
  } else if (format == "structured") {
    text = format_report_structured(report);
  } else {
    text = format_report_text(report, f.timings);
  }
  if (f.report_path.empty()) {
    out << text;
  } else {
    write_file(f.report_path, text);
  }

  if (!f.tables_path.empty()) {
    std::string tables;
    for (const LevelTable& t : build_all_levels(ds)) {
      tables += "# level " + std::to_string(t.level) + " height " +
                std::to_string(t.term_height) + "\n";
      tables += format_level_table(t);
    }
    write_file(f.tables_path, tables);
  }
  if (!report.proposition_holds()) {
    throw Error(ErrorKind::CheckFailed, "badness did not propagate through every level");
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order-theoretic toolkit: term towers, Higman embedding, barriers, f_k transform",
               "wqo"};
  app.require_subcommand(1);
  app.footer(kGrammar);

  std::function<int()> action;
  auto bind = [&action](CLI::App* cmd, std::function<int()> fn) {
    cmd->callback([&action, fn = std::move(fn)] { action = fn; });
  };

  // order ------------------------------------------------------------------
  auto* order = app.add_subcommand("order", "Base linear orders")->require_subcommand(1);
  std::string spec_text;
  // Scalar slots: CLI11 would split a bracketed vector argument like "[2,1]".
  std::array<std::string, 2> slots;
  std::vector<std::pair<CLI::Option*, std::size_t>> slot_options;
  std::vector<std::string> positional;
  auto add_slots = [&](CLI::App* cmd, const char* first, const char* second) {
    slot_options.emplace_back(cmd->add_option(first, slots[0]), 0);
    if (second) slot_options.emplace_back(cmd->add_option(second, slots[1]), 1);
  };

  auto* order_compare = order->add_subcommand("compare", "Compare two elements: LT, EQ or GT");
  order_compare->add_option("--spec", spec_text, "Order spec")->required();
  add_slots(order_compare, "a", "b");
  bind(order_compare, [&] {
    const OrderSpec spec = parse_spec(spec_text);
    std::vector<BaseElem> xs;
    for (const auto& p : positional) xs.push_back(parse_elem(spec, p));
    require_count(positional, 2, "elements");
    out << ordering_name(compare_base(spec, xs[0], xs[1])) << "\n";
    return 0;
  });

  auto* order_zero = order->add_subcommand("zero", "Least element 0 of an omega+Y order");
  order_zero->add_option("--spec", spec_text, "Order spec")->required();
  bind(order_zero, [&] {
    out << format_elem(zero_elem(parse_spec(spec_text))) << "\n";
    return 0;
  });

  auto* order_one_plus = order->add_subcommand("one-plus", "The map x -> 1+x");
  order_one_plus->add_option("--spec", spec_text, "Order spec")->required();
  add_slots(order_one_plus, "x", nullptr);
  bind(order_one_plus, [&] {
    const OrderSpec spec = parse_spec(spec_text);
    require_count(positional, 1, "element");
    out << format_elem(one_plus(spec, parse_elem(spec, positional[0]))) << "\n";
    return 0;
  });

  // cnf --------------------------------------------------------------------
  auto* cnf = app.add_subcommand("cnf", "Term towers omega^X_n")->require_subcommand(1);
  unsigned height = 0;
  auto add_term_cmd = [&](const char* name, const char* help) {
    auto* cmd = cnf->add_subcommand(name, help);
    cmd->add_option("--spec", spec_text, "Leaf order spec")->required();
    cmd->add_option("--height", height, "Term height n")->required();
    add_slots(cmd, "t1", "t2");
    return cmd;
  };
  auto read_terms = [&](std::size_t count) {
    const OrderSpec spec = parse_spec(spec_text);
    std::vector<Term> ts;
    for (const auto& p : positional) ts.push_back(parse_valid_term(spec, height, p));
    require_count(positional, count, "terms");
    return std::make_pair(spec, ts);
  };

  bind(add_term_cmd("compare", "Lexicographic comparison: LT, EQ or GT"), [&] {
    auto [spec, ts] = read_terms(2);
    out << ordering_name(lex_compare(ts[0], ts[1])) << "\n";
    return 0;
  });
  bind(add_term_cmd("c", "Collapse c(t1,t2), one level down"), [&] {
    auto [spec, ts] = read_terms(2);
    out << format_term(c_value(spec, ts[0], ts[1])) << "\n";
    return 0;
  });
  bind(add_term_cmd("j", "Index j(t1,t2) of the first differing entry"), [&] {
    auto [spec, ts] = read_terms(2);
    out << j_index(ts[0], ts[1]) << "\n";
    return 0;
  });
  bind(add_term_cmd("validate", "Check the carrier conditions of a term"), [&] {
    auto [spec, ts] = read_terms(1);
    out << "ok\n";
    return 0;
  });
  bind(add_term_cmd("one-plus", "The map t -> 1+t"), [&] {
    auto [spec, ts] = read_terms(1);
    out << format_term(one_plus_term(spec, ts[0])) << "\n";
    return 0;
  });

  std::uint64_t seed = 1;
  std::size_t count = 10;
  Natural leaf_bound = 6;
  auto* cnf_random = cnf->add_subcommand(
      "random", "Print a random strictly descending sequence file (default seed 1)");
  cnf_random->add_option("--spec", spec_text, "Leaf order spec")->required();
  cnf_random->add_option("--height", height, "Term height n")->required();
  cnf_random->add_option("--count", count, "Number of terms (default 10)");
  cnf_random->add_option("--seed", seed, "Generator seed (default 1)");
  cnf_random->add_option("--leaf-bound", leaf_bound, "Leaf values are below this (default 6)")
      ->check(CLI::PositiveNumber);
  bind(cnf_random, [&] {
    const OrderSpec spec = parse_spec(spec_text);
    TermGenerator gen(seed, leaf_bound);
    out << format_sequence_file(spec, height, gen.descending(spec, height, count));
    return 0;
  });

  // higman -----------------------------------------------------------------
  auto* higman = app.add_subcommand("higman", "Higman embedding")->require_subcommand(1);
  std::string q_text;
  auto* embed = higman->add_subcommand("embed", "Decide s <= t in the Higman order: true/false");
  embed->add_option("--q", q_text, "Quasi order of the entries")->required();
  add_slots(embed, "s", "t");
  bind(embed, [&] {
    const QuasiOrder q = parse_qo(q_text);
    const QuasiOrder seq = QuasiOrder::seq_over(q);
    std::vector<QValue> xs;
    for (const auto& p : positional) xs.push_back(parse_qvalue(seq, p));
    require_count(positional, 2, "sequences");
    const auto& s = *std::get<QValue::SeqPtr>(xs[0].value);
    const auto& t = *std::get<QValue::SeqPtr>(xs[1].value);
    out << (higman_leq(q, s, t) ? "true" : "false") << "\n";
    return 0;
  });

  // barrier ----------------------------------------------------------------
  auto* barrier = app.add_subcommand("barrier", "Barriers [N]^k")->require_subcommand(1);
  std::size_t k = 1;
  Natural window = 0;
  auto* pairs = barrier->add_subcommand("pairs", "List every triangle pair s|t in the window");
  pairs->add_option("--k", k, "Node length")->required()->check(CLI::PositiveNumber);
  pairs->add_option("--window", window, "Entries are below this")->required();
  bind(pairs, [&] {
    for (const auto& [s, t] : enumerate_pairs(k, window)) out << format_pair(s, t) << "\n";
    return 0;
  });
  auto* nodes = barrier->add_subcommand("nodes", "List the window's nodes in lexicographic order");
  nodes->add_option("--k", k, "Node length")->required()->check(CLI::PositiveNumber);
  nodes->add_option("--window", window, "Entries are below this")->required();
  bind(nodes, [&] {
    for (const Node& n : enumerate_window(k, window)) out << format_node(n) << "\n";
    return 0;
  });
  auto* uni = barrier->add_subcommand("union", "s u t for s triangle t");
  add_slots(uni, "s", "t");
  bind(uni, [&] {
    require_count(positional, 2, "nodes");
    out << format_node(node_union(parse_node(positional[0]), parse_node(positional[1]))) << "\n";
    return 0;
  });
  auto* spl = barrier->add_subcommand("split", "Decompose u as s u t");
  add_slots(spl, "u", nullptr);
  bind(spl, [&] {
    require_count(positional, 1, "node");
    auto [s, t] = split(parse_node(positional[0]));
    out << format_pair(s, t) << "\n";
    return 0;
  });

  // transform --------------------------------------------------------------
  auto* transform = app.add_subcommand("transform", "The f_k transform of a descending sequence")
                        ->require_subcommand(1);
  ReportFlags flags;
  std::string start_text;
  std::size_t fuel = 1;
  std::size_t steps = 0;
  auto* trun = transform->add_subcommand("run", "Run the pipeline on a canonical descent");
  trun->add_option("--spec", spec_text, "Leaf order spec (omega+Y form)")->required();
  trun->add_option("--height", height, "Term height n")->required();
  trun->add_option("--start", start_text, "Starting term")->required();
  trun->add_option("--fuel", fuel, "Copies per step")->required()->check(CLI::PositiveNumber);
  trun->add_option("--steps", steps, "Window length N")->required();
  flags.attach(trun);
  bind(trun, [&] {
    const OrderSpec spec = parse_spec(spec_text);
    const Term start = parse_valid_term(spec, height, start_text);
    require_window_fits(height, steps);
    const DescendingSequence ds = canonical_descent(spec, height, start, fuel, steps);
    const std::string source = "canonical start=" + format_term(start) +
                               " fuel=" + std::to_string(fuel) +
                               " steps=" + std::to_string(steps);
    return emit_pipeline(ds, source, flags, out);
  });

  std::string input_path;
  auto* tverify = transform->add_subcommand("verify", "Run the pipeline on a sequence file");
  tverify->add_option("--input", input_path, "Sequence file")->required();
  flags.attach(tverify);
  bind(tverify, [&] {
    SequenceFile file = parse_sequence_file(read_file(input_path));
    const DescendingSequence ds =
        DescendingSequence::over_canonical_host(file.spec, file.height, std::move(file.terms));
    return emit_pipeline(ds, "file " + input_path, flags, out);
  });

  std::vector<std::string> argv_storage{"wqo"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [option, slot] : slot_options) {
    if (option->count() > 0) positional.push_back(slots[slot]);
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << error_name(e.kind()) << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wqo::cli
