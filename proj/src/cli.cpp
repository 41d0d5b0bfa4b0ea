#include "circtrans/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "circtrans/census.hpp"
#include "circtrans/constructive_solver.hpp"
#include "circtrans/exact_oracle.hpp"

namespace circtrans {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string s, t, file;
  int n = 0, ones = 0, count = 0;
  std::uint64_t seed = 1;
  bool exact = false, json = false, trace = false, optimal = false, parallel = false;
};

Json moves_json(const std::vector<Transposition>& moves) {
  Json arr = Json::array();
  for (const auto& m : moves) arr.push_back({m.i, m.j, m.k});
  return arr;
}

int cmd_dist(const Options& o, std::ostream& out) {
  const auto s = parse_input(o.s), t = parse_input(o.t);
  const BoundReport r = analyze_pair(s, t, o.exact);
  if (o.json) {
    Json j;
    j["s"] = s.bits();
    j["t"] = t.bits();
    j["k"] = r.k;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["upper_source"] = to_string(r.upper_source);
    j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
    j["is_diameter"] = r.is_diameter;
    out << j.dump() << '\n';
    return exit_ok;
  }
  out << "k=" << r.k << " lower=" << r.lower << " upper=" << r.upper
      << " upper_source=" << to_string(r.upper_source);
  if (r.exact) out << " exact=" << *r.exact;
  out << " is_diameter=" << (r.is_diameter ? "true" : "false") << '\n';
  return exit_ok;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = parse_input(o.s), t = parse_input(o.t);
  require_compatible(s, t);
  TranspositionSequence seq{s, {}, t};
  std::string method = "optimal";
  if (o.optimal) {
    seq = exact_path(s, t);
  } else {
    UpperBound up = best_upper_bound(s, t);
    seq = std::move(up.sequence);
    method = std::string(to_string(up.source));
  }
  const ReplayReport check = replay(seq);
  if (!check.ok) {
    err << "error: constructed sequence does not replay: " << check.message << '\n';
    return exit_solver;
  }
  const auto words = chain_words(s.bits(), seq.moves);
  if (o.json) {
    Json j;
    j["s"] = s.bits();
    j["t"] = t.bits();
    j["method"] = method;
    j["length"] = seq.length();
    j["moves"] = moves_json(seq.moves);
    if (o.trace) j["words"] = words;
    out << j.dump() << '\n';
    return exit_ok;
  }
  if (o.trace) out << "# " << method << ": " << seq.length() << " moves\n# start " << words.front() << '\n';
  for (std::size_t m = 0; m < seq.moves.size(); ++m) {
    out << seq.moves[m].i << ' ' << seq.moves[m].j << ' ' << seq.moves[m].k;
    if (o.trace) out << "  # " << words[m + 1];
    out << '\n';
  }
  return exit_ok;
}

std::vector<Transposition> read_moves(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open move file " + path);
  std::vector<Transposition> moves;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<int> values;
    std::string token;
    while (fields >> token) {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw InvalidInputError("line " + std::to_string(number) + ": \"" + token + "\" is not an integer");
      values.push_back(v);
    }
    if (values.empty()) continue;
    if (values.size() != 3)
      throw InvalidInputError("line " + std::to_string(number) + ": expected three integers \"i j k\"");
    moves.push_back({values[0], values[1], values[2]});
  }
  return moves;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto s = parse_input(o.s), t = parse_input(o.t);
  require_compatible(s, t);
  const TranspositionSequence seq{s, read_moves(o.file), t};
  const ReplayReport r = replay(seq);
  if (o.json) {
    Json j;
    j["result"] = r.ok ? "PASS" : "FAIL";
    j["moves"] = seq.length();
    j["failed_move"] = r.failed_move ? Json(*r.failed_move + 1) : Json(nullptr);
    j["final"] = r.final_word;
    j["message"] = r.message;
    out << j.dump() << '\n';
  } else if (r.ok) {
    out << "PASS (" << seq.length() << " moves)\n";
  } else if (r.failed_move) {
    out << "FAIL at move " << (*r.failed_move + 1) << ": " << r.message << '\n';
  } else {
    out << "FAIL at end: " << r.message << '\n';
  }
  return r.ok ? exit_ok : exit_verify;
}

int cmd_census(const Options& o, std::ostream& out) {
  if (o.n < 3) throw InvalidInputError("census needs n-max >= 3");
  const auto records = run_census(o.n, o.parallel);
  if (!o.json) out << census_csv_header() << '\n';
  bool clean = true;
  for (const auto& r : records) {
    out << (o.json ? to_json_line(r) : to_csv(r)) << '\n';
    clean = clean && r.clean();
  }
  return clean ? exit_ok : exit_census;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto words = generate_classes(o.n, o.ones, o.count, o.seed);
  if (o.json) {
    Json j;
    j["n"] = o.n;
    j["ones"] = o.ones;
    j["seed"] = o.seed;
    j["classes"] = words;
    out << j.dump() << '\n';
    return exit_ok;
  }
  for (const auto& w : words) out << w << '\n';
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transposition distance on circular binary strings", "circtrans"};
  app.require_subcommand(1);
  Options o;

  auto* dist = app.add_subcommand("dist", "Lower/upper bounds and the diameter test for a pair");
  dist->add_option("S", o.s, "bit string or p:w1,w2,...")->required();
  dist->add_option("T", o.t)->required();
  dist->add_flag("--exact", o.exact, "Run the BFS oracle");
  dist->add_flag("--json", o.json);

  auto* solve = app.add_subcommand("solve", "Print a move sequence from S to T");
  solve->add_option("S", o.s)->required();
  solve->add_option("T", o.t)->required();
  solve->add_flag("--optimal", o.optimal, "Shortest sequence from the BFS oracle");
  solve->add_flag("--trace", o.trace, "Show each intermediate word");
  solve->add_flag("--json", o.json);

  auto* verify = app.add_subcommand("verify", "Replay a move file from S and check it reaches T");
  verify->add_option("S", o.s)->required();
  verify->add_option("FILE", o.file)->required();
  verify->add_option("T", o.t)->required();
  verify->add_flag("--json", o.json);

  auto* census = app.add_subcommand("census", "Check every class pair up to length N");
  census->add_option("N", o.n)->required();
  census->add_flag("--parallel", o.parallel, "One worker per bucket");
  census->add_flag("--json", o.json);

  auto* gen = app.add_subcommand("gen", "Random canonical classes of a bucket");
  gen->add_option("N", o.n)->required();
  gen->add_option("ONES", o.ones)->required();
  gen->add_option("COUNT", o.count)->required();
  gen->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  gen->add_flag("--json", o.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse;
  }

  try {
    if (dist->parsed()) return cmd_dist(o, out);
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (census->parsed()) return cmd_census(o, out);
    return cmd_gen(o, out);
  } catch (const IncompatiblePairError& e) {
    err << "error: " << e.what() << '\n';
    return exit_incompatible;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << '\n';
    return exit_solver;
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse;
  }
}

}  // namespace circtrans
