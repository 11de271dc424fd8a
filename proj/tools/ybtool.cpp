// Command-line front end: verify / analyze / retract / construct /
// enumerate / minorder / census / graph over the ybs file format.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ybe/construct.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/group.hpp"
#include "ybe/io.hpp"
#include "ybe/report.hpp"
#include "ybe/retract.hpp"

namespace {

using namespace ybe;

constexpr int kExitNotSolution = 2;
constexpr int kExitError = 1;
constexpr int kExitUsage = 64;

QuadraticSet read_input(const std::string& path) {
  if (path == "-") return parse_ybs_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_ybs_stream(in);
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path == "-" || path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << bytes;
}

int cmd_verify(const std::string& file) {
  QuadraticSet q = read_input(file);
  PropertyFlags f = classify(q);
  auto labels = q.label_vec();
  auto put = [&](const char* name, bool v) {
    std::cout << name << ": " << (v ? "yes" : "no");
    auto it = f.first_witness.find(name);
    if (it != f.first_witness.end()) {
      std::cout << "  (witness:";
      for (int w : it->second) std::cout << ' ' << labels[w];
      std::cout << ")";
    }
    std::cout << "\n";
  };
  put("nondegenerate", f.nondegenerate);
  put("involutive", f.involutive);
  put("braided", f.braided);
  put("l1", f.l1);
  put("r1", f.r1);
  put("lr3", f.lr3);
  put("square_free", f.square_free);
  put("lri", f.lri);
  put("cl1", f.cl1);
  put("cl2", f.cl2);
  put("cr1", f.cr1);
  put("cr2", f.cr2);
  bool ok = f.is_square_free_solution();
  std::cout << "square-free solution: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : kExitNotSolution;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-theoretic Yang-Baxter solution toolkit"};
  app.require_subcommand(1);

  std::string file, out_path = "-";
  bool json = false, loops = false, up_to_iso = false, count_only = false;
  std::size_t max_group = 1000000;
  int k_levels = 1, n = 0, mpl_filter = -1, shards = 1, max_n = 5;
  std::string family;
  std::vector<std::string> args;

  auto* verify = app.add_subcommand("verify", "check the axioms of a solution file");
  verify->add_option("file", file, "ybs file, or - for stdin")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "full structural report");
  analyze_cmd->add_option("file", file)->required();
  analyze_cmd->add_option("--max-group", max_group,
                          "element-enumeration bound for invariants");
  analyze_cmd->add_flag("--json", json, "machine-readable report");

  auto* retract_cmd = app.add_subcommand("retract", "write an iterated retract");
  retract_cmd->add_option("file", file)->required();
  retract_cmd->add_option("-k,--levels", k_levels, "number of retraction steps");
  retract_cmd->add_option("-o,--output", out_path, "output file, - for stdout");

  auto* construct_cmd = app.add_subcommand("construct", "build a named family");
  construct_cmd->add_option("family", family,
                            "trivial|gi|easy|double|wreath|extend-tau|"
                            "abelian-mpl2|linear|stu")
      ->required();
  construct_cmd->add_option("args", args, "family arguments");
  construct_cmd->add_option("-o,--output", out_path);

  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive search at order n");
  enum_cmd->add_option("-n", n, "order")->required();
  enum_cmd->add_flag("--up-to-iso", up_to_iso);
  enum_cmd->add_option("--mpl", mpl_filter, "only solutions of this level");
  enum_cmd->add_flag("--count-only", count_only);
  enum_cmd->add_option("--shards", shards);

  auto* minorder_cmd = app.add_subcommand("minorder", "minimal order for a level");
  minorder_cmd->add_option("--mpl", mpl_filter, "target level")->required();
  minorder_cmd->add_option("--max-n", max_n)->required();

  auto* census_cmd = app.add_subcommand("census", "per-order summary table");
  census_cmd->add_option("--max-n", max_n)->required();

  auto* graph_cmd = app.add_subcommand("graph", "DOT export of the action graph");
  graph_cmd->add_option("file", file)->required();
  graph_cmd->add_flag("--loops", loops, "keep self-loops");
  graph_cmd->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(file);

    if (analyze_cmd->parsed()) {
      QuadraticSet q = read_input(file);
      SolutionReport rep = analyze(q, {max_group});
      std::cout << (json ? report_json(rep, q) : report_text(rep, q));
      return 0;
    }

    if (retract_cmd->parsed()) {
      QuadraticSet q = read_input(file);
      for (int i = 0; i < k_levels; ++i) q = retract(q).quotient;
      write_output(out_path, write_ybs(q));
      return 0;
    }

    if (construct_cmd->parsed()) {
      auto want = [&](std::size_t lo, std::size_t hi, const char* usage) {
        if (args.size() < lo || args.size() > hi)
          throw CLI::ValidationError("construct", usage);
      };
      QuadraticSet q;
      if (family == "trivial") {
        want(1, 1, "construct trivial <n>");
        q = trivial_solution(std::stoi(args[0]));
      } else if (family == "gi") {
        want(1, 1, "construct gi <m>");
        q = gi_X(std::stoi(args[0]));
      } else if (family == "easy") {
        want(1, 1, "construct easy <m>");
        q = easy_family(std::stoi(args[0]));
      } else if (family == "double") {
        want(1, 1, "construct double <file>");
        q = canonical_doubling(read_input(args[0]));
      } else if (family == "wreath") {
        want(2, 2, "construct wreath <file-x0> <file-y>");
        q = wreath_product(read_input(args[0]), read_input(args[1]));
      } else if (family == "extend-tau") {
        want(2, 2, "construct extend-tau <file> <cycles>");
        QuadraticSet base = read_input(args[0]);
        q = extend_by_automorphism(base,
                                   parse_cycles(args[1], base.label_vec()));
      } else if (family == "abelian-mpl2") {
        want(1, 64, "construct abelian-mpl2 <d1> [d2 ...]");
        std::vector<std::uint64_t> ds;
        for (const auto& a : args) ds.push_back(std::stoull(a));
        q = abelian_mpl2(ds);
      } else if (family == "linear") {
        want(2, 3, "construct linear <N> <omega> [k]");
        LinearParams p;
        p.modulus = std::stoull(args[0]);
        p.unit = std::stoull(args[1]);
        p.rank = args.size() > 2 ? unsigned(std::stoul(args[2])) : 1u;
        q = linear_solution(p);
      } else if (family == "stu") {
        want(3, 3, "construct stu <file1> <file2> <actions-file>");
        QuadraticSet q1 = read_input(args[0]), q2 = read_input(args[1]);
        StuActions act;
        act.a_on_b.assign(q1.n, Permutation(q2.n));
        act.b_on_a.assign(q2.n, Permutation(q1.n));
        std::ifstream in(args[2]);
        if (!in) throw std::runtime_error("cannot open " + args[2]);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
          ++lineno;
          auto hash = line.find('#');
          if (hash != std::string::npos) line.erase(hash);
          std::istringstream ls(line);
          std::string side, idx, colon;
          if (!(ls >> side)) continue;
          if (!(ls >> idx)) throw ParseError(lineno, "expected '<side> <i>: <cycles>'");
          if (!idx.empty() && idx.back() == ':') idx.pop_back();
          else ls >> colon;
          std::string rest;
          std::getline(ls, rest);
          int i = std::stoi(idx) - 1;
          if (side == "A")
            act.a_on_b.at(i) = parse_cycles(rest, q2.label_vec());
          else if (side == "B")
            act.b_on_a.at(i) = parse_cycles(rest, q1.label_vec());
          else
            throw ParseError(lineno, "side must be A or B");
        }
        StuResult res = stu_union(q1, q2, act);
        std::cerr << "stu union: " << (res.is_solution ? "solution" : "NOT a solution")
                  << "\n";
        if (!res.is_solution) {
          write_output(out_path, write_ybs(res.set));
          return kExitNotSolution;
        }
        q = res.set;
      } else {
        std::cerr << "unknown family '" << family << "'\n";
        return kExitUsage;
      }
      write_output(out_path, write_ybs(q));
      return 0;
    }

    if (enum_cmd->parsed()) {
      EnumerateOptions opts;
      opts.up_to_iso = up_to_iso;
      opts.shards = shards;
      if (n == 8) opts.hard_cap = 8;
      std::uint64_t count = 0;
      enumerate_square_free(n, opts, [&](const QuadraticSet& q) {
        if (mpl_filter >= 0 && mpl(q) != mpl_filter) return true;
        ++count;
        if (!count_only) std::cout << write_ybs(q) << "\n";
        return true;
      });
      if (count_only) std::cout << count << "\n";
      return 0;
    }

    if (minorder_cmd->parsed()) {
      auto found = min_order_scan(mpl_filter, max_n);
      if (found) {
        std::cout << *found << "\n";
        return 0;
      }
      std::cout << "none up to " << max_n << "\n";
      return kExitNotSolution;
    }

    if (census_cmd->parsed()) {
      std::cout << "n\tcount\tby_mpl\tby_|G|\tabelian\tirretractable\n";
      for (const auto& row : census(max_n)) {
        std::cout << row.n << "\t" << row.count << "\t";
        bool first = true;
        for (const auto& [m, c] : row.by_mpl) {
          std::cout << (first ? "" : ",") << m << ":" << c;
          first = false;
        }
        std::cout << "\t";
        first = true;
        for (const auto& [o, c] : row.by_group_order) {
          std::cout << (first ? "" : ",") << o << ":" << c;
          first = false;
        }
        std::cout << "\t" << row.abelian_count << "\t" << row.irretractable
                  << "\n";
        if (row.irretractable)
          std::cerr << "WARNING: irretractable square-free solution at n = "
                    << row.n << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  if (graph_cmd->parsed()) {
    try {
      QuadraticSet q = read_input(file);
      write_output(out_path, export_dot(q, loops));
      return 0;
    } catch (const ParseError& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return kExitError;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitNotSolution;  // lri failure is a verdict, not an I/O error
    }
  }
  return kExitUsage;
}
