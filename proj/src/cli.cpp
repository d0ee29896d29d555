#include "domino/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "domino/cells.hpp"
#include "domino/cycles.hpp"
#include "domino/insertion.hpp"
#include "domino/io.hpp"
#include "domino/operators.hpp"

namespace domino {

namespace {

struct Options {
  int rank = 0;
  int n = -1;
  std::optional<std::string> word;
  std::string format = "json";
  std::string out;
  std::string input;
  std::string side = "right";
  int jobs = 0;
  int cap = kDefaultVerifyCap;
  std::vector<int> labels;
  bool extended = false;
  std::string apply;
  bool check_tableau = false;
  std::string kind = "reducible-right";
  bool dot = false;
  std::string suite = "all";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json read_document(const Options& o, std::istream& in) {
  std::string text;
  if (o.input.empty() || o.input == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(o.input);
    if (!file) throw DomainError("cannot open " + o.input);
    text = read_all(file);
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

TableauPair pair_of_word(const Options& o) {
  if (!o.word) throw UsageError("--word is required");
  return rs_map(parse_word(*o.word), o.rank);
}

// Either --word (then --side picks the tableau) or a tableau/pair document.
DominoTableau tableau_of(const Options& o, std::istream& in) {
  if (o.side != "left" && o.side != "right") throw UsageError("--side must be left or right");
  if (o.word) {
    const TableauPair p = pair_of_word(o);
    return o.side == "left" ? p.left : p.right;
  }
  const Json doc = read_document(o, in);
  if (doc.contains("left")) return tableau_from_json(doc.at(o.side));
  return tableau_from_json(doc);
}

bool ascii(const Options& o) {
  if (o.format != "json" && o.format != "ascii") throw UsageError("--format must be json or ascii");
  return o.format == "ascii";
}

std::string cycle_line(const CycleSet& c, const CycleClass& cls) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.labels.size(); ++i) s += (i ? "," : "") + std::to_string(c.labels[i]);
  s += "} " + std::string(to_string(cls.kind));
  if (cls.back) s += " sb=" + to_string(*cls.back) + " sf=" + to_string(*cls.front);
  return s + "\n";
}

std::string cmd_rs(const Options& o) {
  const TableauPair p = pair_of_word(o);
  return ascii(o) ? render_ascii(p) : dump(to_json(p));
}

std::string cmd_inverse_rs(const Options& o, std::istream& in) {
  const TableauPair p = pair_from_json(read_document(o, in));
  if (p.left.rank() != p.right.rank()) throw DomainError("tableaux have different ranks");
  return format_word(rs_inverse(p)) + "\n";
}

std::string cmd_cycles(const Options& o, std::istream& in) {
  const DominoTableau t = tableau_of(o, in);
  std::string text;
  Json arr = Json::array();
  for (const CycleSet& c : cycles(t)) {
    const CycleClass cls = classify(t, c);
    arr.push_back(to_json(c, cls));
    text += cycle_line(c, cls);
  }
  return ascii(o) ? text : dump(arr);
}

std::string cmd_mt(const Options& o, std::istream& in) {
  if (o.labels.empty()) throw UsageError("--label is required");
  if (o.extended) {
    if (o.labels.size() != 1) throw UsageError("--extended takes a single --label");
    const TableauPair p = pair_of_word(o);
    const Side side = o.side == "left" ? Side::Left : Side::Right;
    const ExtendedCyclePair c = extended_cycle(p, o.labels.front(), side);
    const TableauPair moved = move_through_pair(p, c);
    if (ascii(o)) return render_ascii(moved);
    return dump({{"in_left", c.in_left}, {"in_right", c.in_right}, {"pair", to_json(moved)}});
  }
  const DominoTableau t = tableau_of(o, in);
  std::vector<CycleSet> chosen;
  for (int label : o.labels) {
    CycleSet c = cycle(t, label);
    if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) chosen.push_back(std::move(c));
  }
  const DominoTableau moved = move_through_set(t, chosen);
  return ascii(o) ? render_ascii(moved) : dump(to_json(moved));
}

std::string cmd_special(const Options& o, std::istream& in) {
  const DominoTableau s = special_form(tableau_of(o, in));
  return ascii(o) ? render_ascii(s) : dump(to_json(s));
}

std::string cmd_ops(const Options& o, int& status) {
  if (!o.word) throw UsageError("--word is required");
  const SignedPermutation w = parse_word(*o.word);
  if (o.apply.empty()) {
    std::vector<std::string> names;
    for (const OperatorDescriptor& op : lambda_set(w.size(), o.rank)) {
      if (applicable(op, w)) names.push_back(to_string(op));
    }
    if (ascii(o)) {
      std::string s;
      for (const std::string& name : names) s += name + "\n";
      return s;
    }
    return dump({{"word", format_word(w)}, {"rank", o.rank}, {"applicable", names}});
  }

  const OperatorDescriptor op = parse_operator(o.apply);
  const SignedPermutation v = apply(op, w);
  Json out{{"word", format_word(w)}, {"op", to_string(op)}, {"result", format_word(v)}};
  std::string text = format_word(v) + "\n";
  if (o.check_tableau) {
    const TableauPair before = rs_map(w, o.rank);
    const TableauPair expected = rs_map(v, o.rank);
    const TableauPair got = apply_op_tableau(op, before);
    const bool agree = got == expected;
    if (!agree) status = kExitVerification;
    out["before"] = to_json(before);
    out["after"] = to_json(got);
    if (op.kind == OperatorDescriptor::Kind::InSwap) {
      const InSwapTrace trace = trace_in_swap(before, op.index);
      Json t{{"sparse", trace.sparse}};
      if (trace.config) t["configuration"] = to_string(*trace.config);
      if (trace.moved) {
        std::vector<int> own, partner;
        for (const CycleSet& c : trace.cycle.own) own.insert(own.end(), c.labels.begin(), c.labels.end());
        for (const CycleSet& c : trace.cycle.partner) partner.insert(partner.end(), c.labels.begin(), c.labels.end());
        t["cycle_right"] = own;
        t["cycle_left"] = partner;
        t["moved"] = to_json(*trace.moved);
      }
      out["trace"] = std::move(t);
    }
    out["tableau_check"] = agree ? "agree" : "disagree";
    text += render_ascii(got) + (agree ? "tableau check: agree\n" : "tableau check: DISAGREE\n");
  }
  return ascii(o) ? text : dump(out);
}

CellTable table_for(const Options& o, int n, int rank) {
  if (n < 0) throw UsageError("--n is required");
  if (o.cap > kDefaultGroupCap) throw UsageError("--cap may not exceed " + std::to_string(kDefaultGroupCap));
  return build_table(n, rank, Kernel::Parallel, o.jobs, o.cap);
}

std::string cmd_cells(const Options& o) {
  const CellTable t = table_for(o, o.n, o.rank);
  static const std::map<std::string, std::function<CellPartition(const CellTable&)>> kinds = {
      {"irreducible-left", [](const CellTable& x) { return partition_irreducible(x, CellSide::Left); }},
      {"reducible-left", [](const CellTable& x) { return partition_reducible(x, CellSide::Left); }},
      {"irreducible-right", [](const CellTable& x) { return partition_irreducible(x, CellSide::Right); }},
      {"reducible-right", [](const CellTable& x) { return partition_reducible(x, CellSide::Right); }},
      {"operator-components", [](const CellTable& x) { return operator_components(x); }},
  };
  const auto it = kinds.find(o.kind);
  if (it == kinds.end()) throw UsageError("unknown --kind " + o.kind);
  const CellPartition p = it->second(t);
  if (!ascii(o)) return dump(to_json(p));
  std::string s;
  for (const auto& block : p.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) s += (i ? "  " : "") + format_word(block[i]);
    s += "\n";
  }
  return s;
}

std::string cmd_graph(const Options& o) {
  if (o.n < 0) throw UsageError("--n is required");
  if (o.n > o.cap) throw DomainError("n=" + std::to_string(o.n) + " exceeds the cap " + std::to_string(o.cap));
  const std::vector<OperatorEdge> edges = operator_edges(o.n, o.rank, o.cap);
  if (o.dot) return to_dot(o.n, o.rank, edges);
  Json arr = Json::array();
  for (const OperatorEdge& e : edges) {
    arr.push_back({{"from", format_word(e.from)}, {"to", format_word(e.to)}, {"op", to_string(e.op)}});
  }
  return dump({{"n", o.n}, {"rank", o.rank}, {"edges", arr}});
}

std::vector<VerifyReport> run_suites(const Options& o) {
  static const std::vector<std::string> known = {"stability", "generation", "refinement", "parabolic", "bijectivity",
                                                 "cycles",    "operators",  "asymptotic", "all"};
  if (std::find(known.begin(), known.end(), o.suite) == known.end()) throw UsageError("unknown --suite " + o.suite);
  const CellTable t = table_for(o, o.n, o.rank);
  const bool all = o.suite == "all";
  auto wants = [&](const char* s) { return all || o.suite == s; };

  std::vector<VerifyReport> reports;
  if (wants("bijectivity")) reports.push_back(verify_bijectivity(t));
  if (wants("stability")) reports.push_back(verify_stability(t));
  if (wants("generation")) reports.push_back(verify_generation(t));
  if (wants("operators")) reports.push_back(verify_operators(t));
  if (wants("cycles")) reports.push_back(verify_cycles(t));
  if (wants("refinement") || wants("asymptotic")) {
    const CellTable next = table_for(o, o.n, o.rank + 1);
    if (wants("refinement")) reports.push_back(verify_refinement(t, next));
    if (o.suite == "asymptotic" || (all && o.rank >= o.n - 1)) {
      if (o.rank < o.n - 1) throw DomainError("the asymptotic suite needs rank >= n-1");
      reports.push_back(verify_asymptotic(t, next));
    }
  }
  if (wants("parabolic")) {
    for (int m = 0; m <= o.n; ++m) reports.push_back(verify_parabolic(t, table_for(o, m, o.rank)));
  }
  return reports;
}

std::string cmd_verify(const Options& o, int& status) {
  const std::vector<VerifyReport> reports = run_suites(o);
  bool passed = true;
  for (const VerifyReport& r : reports) passed = passed && r.passed();
  if (!passed) status = kExitVerification;

  const bool text_only = ascii(o);
  std::string s;
  Json arr = Json::array();
  for (const VerifyReport& r : reports) {
    arr.push_back(to_json(r));
    s += std::string(r.passed() ? "PASS " : "FAIL ") + r.suite + " n=" + std::to_string(r.n) +
         " r=" + std::to_string(r.rank) + (r.m >= 0 ? " m=" + std::to_string(r.m) : "") + " checked=" +
         std::to_string(r.checked) + " violations=" + std::to_string(r.violations) + "\n";
    if (!r.passed()) s += to_json(r).dump() + "\n";
  }
  return text_only ? s : dump({{"passed", passed}, {"reports", arr}});
}

std::string cmd_render(const Options& o, std::istream& in) {
  if (o.word) return render_ascii(pair_of_word(o));
  const Json doc = read_document(o, in);
  if (doc.contains("left")) return render_ascii(pair_from_json(doc));
  return render_ascii(tableau_from_json(doc));
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw DomainError("cannot write " + o.out);
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Rank r domino Robinson-Schensted correspondence and combinatorial cells of W_n", "domino"};
  app.require_subcommand(1);

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or ascii");
    sub->add_option("--out", o.out, "write output to this file");
  };
  auto word_rank = [&o](CLI::App* sub) {
    sub->add_option("--rank", o.rank, "rank r of the correspondence")->check(CLI::NonNegativeNumber);
    sub->add_option("--word", o.word, "signed permutation, e.g. \"4,-3,-2,1\"");
  };
  auto group = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "size of W_n")->check(CLI::NonNegativeNumber);
    sub->add_option("--rank", o.rank, "rank r")->check(CLI::NonNegativeNumber);
    sub->add_option("--jobs", o.jobs, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--cap", o.cap, "largest n accepted");
  };
  auto tableau_input = [&o](CLI::App* sub) {
    sub->add_option("--in", o.input, "tableau or pair JSON file ('-' for stdin)");
    sub->add_option("--side", o.side, "left or right tableau of the pair");
  };

  CLI::App* rs = app.add_subcommand("rs", "tableau pair G_r(w)");
  word_rank(rs);
  common(rs);
  CLI::App* inv = app.add_subcommand("inverse-rs", "word of a tableau pair");
  inv->add_option("--in", o.input, "pair JSON file (default stdin)");
  common(inv);
  CLI::App* cyc = app.add_subcommand("cycles", "cycles of a tableau with their classes");
  word_rank(cyc);
  tableau_input(cyc);
  common(cyc);
  CLI::App* mt = app.add_subcommand("mt", "move through the cycles containing the given labels");
  word_rank(mt);
  tableau_input(mt);
  mt->add_option("--label", o.labels, "label whose cycle is moved through (repeatable)");
  mt->add_flag("--extended", o.extended, "move the pair through the extended cycle through --label");
  common(mt);
  CLI::App* special = app.add_subcommand("special", "special form S(T)");
  word_rank(special);
  tableau_input(special);
  common(special);
  CLI::App* ops = app.add_subcommand("ops", "list or apply operators of Lambda^{r+1}");
  word_rank(ops);
  ops->add_option("--apply", o.apply, "operator such as knuth(1), in(3), sc(3)");
  ops->add_flag("--check-tableau", o.check_tableau, "also run the action on tableaux and compare");
  common(ops);
  CLI::App* cells = app.add_subcommand("cells", "cell partition of W_n");
  group(cells);
  cells->add_option("--kind", o.kind,
                    "irreducible-left|reducible-left|irreducible-right|reducible-right|operator-components");
  common(cells);
  CLI::App* graph = app.add_subcommand("graph", "operator graph on W_n");
  group(graph);
  graph->add_flag("--dot", o.dot, "emit Graphviz DOT");
  common(graph);
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  group(verify);
  verify->add_option("--suite", o.suite,
                     "stability|generation|refinement|parabolic|bijectivity|cycles|operators|asymptotic|all");
  common(verify);
  CLI::App* render = app.add_subcommand("render", "ASCII drawing of a tableau or pair");
  word_rank(render);
  render->add_option("--in", o.input, "tableau or pair JSON file ('-' for stdin)");
  render->add_option("--out", o.out, "write output to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  if (verify->parsed() && !verify->count("--format")) o.format = "ascii";

  int status = kExitOk;
  try {
    std::string text;
    if (rs->parsed()) text = cmd_rs(o);
    else if (inv->parsed()) text = cmd_inverse_rs(o, in);
    else if (cyc->parsed()) text = cmd_cycles(o, in);
    else if (mt->parsed()) text = cmd_mt(o, in);
    else if (special->parsed()) text = cmd_special(o, in);
    else if (ops->parsed()) text = cmd_ops(o, status);
    else if (cells->parsed()) text = cmd_cells(o);
    else if (graph->parsed()) text = cmd_graph(o);
    else if (verify->parsed()) text = cmd_verify(o, status);
    else if (render->parsed()) text = cmd_render(o, in);
    emit(o, text, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return status;
}

}  // namespace domino
