// Command-line front end.
// Exit codes: 0 ok, 1 usage, 2 parse/validation error, 3 oracle mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "fairgame/bench.hpp"
#include "fairgame/io.hpp"
#include "fairgame/oracle.hpp"
#include "fairgame/solvers.hpp"
#include "fairgame/stochastic.hpp"
#include "fairgame/strategy.hpp"

using namespace fairgame;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kMismatch = 3 };

struct Failure {
  int code;
  std::string msg;
};

struct Loaded {
  GameFile file;
  GameGraph game;  // the arena itself, or its derandomization
  bool stochastic = false;
};

Loaded load(const std::string& path) {
  Loaded l{parse_game(path), {}, false};
  if (auto* sg = std::get_if<StochasticGameGraph>(&l.file.arena)) {
    auto rep = validate(*sg);
    for (auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
    if (!rep.ok()) throw Failure{kInvalid, rep.errors.front()};
    l.game = derand(*sg);
    l.stochastic = true;
  } else {
    l.game = std::get<GameGraph>(l.file.arena);
  }
  auto rep = validate(l.game, l.file.cond);
  if (!l.stochastic)
    for (auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
  if (!rep.ok()) throw Failure{kInvalid, rep.errors.front()};
  return l;
}

std::string names(const GameGraph& g, const VertexSet& s) {
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out += ' ';
    out += g.name(v);
  });
  return out;
}

void print_stats(std::ostream& os, const SolveResult& res, bool kv) {
  os << "symbolic steps\n";
  for (int i = 0; i < static_cast<int>(Op::kCount); ++i) {
    auto op = static_cast<Op>(i);
    if (res.steps[op] == 0) continue;
    char line[96];
    std::snprintf(line, sizeof line, "  %-22s %12llu\n", op_name(op), static_cast<unsigned long long>(res.steps[op]));
    os << line;
  }
  char total[96];
  std::snprintf(total, sizeof total, "  %-22s %12llu\n", "total", static_cast<unsigned long long>(res.steps.total()));
  os << total << "iterations\n";
  for (const auto& [var, count] : res.iterations) {
    char line[96];
    std::snprintf(line, sizeof line, "  %-22s %12llu\n", var.c_str(), static_cast<unsigned long long>(count));
    os << line;
  }
  if (!kv) return;
  for (int i = 0; i < static_cast<int>(Op::kCount); ++i) {
    auto op = static_cast<Op>(i);
    if (res.steps[op]) os << "steps." << op_name(op) << "=" << res.steps[op] << "\n";
  }
  os << "steps.total=" << res.steps.total() << "\n";
  for (const auto& [var, count] : res.iterations) os << "iterations." << var << "=" << count << "\n";
}

void print_ranks(std::ostream& os, const GameGraph& g, const SolveResult& res) {
  RankTable t = ranks_for(g, res);
  for (std::size_t m = 0; m < t.tables.size(); ++m) {
    if (t.tables.size() > 1) os << "ranks for goal vector " << m << "\n";
    else os << "ranks\n";
    for (int v = 0; v < g.size(); ++v) {
      const auto& r = t.tables[m][static_cast<std::size_t>(v)];
      os << "  " << g.name(v) << " ";
      if (!r) {
        os << "inf\n";
      } else if (r->size() >= 2 && res.frames->kind == Frames::Kind::Rabin) {
        os << rank_string(*r) << " (counters " << rank_snapshot(*r) << ")\n";
      } else {
        os << rank_string(*r) << "\n";
      }
    }
  }
}

int cmd_solve(const std::string& path, int accel, const std::string& strategy_out, bool frames, bool stats, bool kv) {
  Loaded l = load(path);
  SolveOptions opt;
  opt.accel = accel;
  opt.record = frames || !strategy_out.empty();
  SolveResult res = solve(l.game, l.file.cond, opt);
  std::cout << "winning: " << names(l.game, res.region) << "\n";
  if (frames) print_ranks(std::cout, l.game, res);
  if (!strategy_out.empty()) {
    std::string text = extract_p0_strategy(l.game, l.file.cond, res).serialize(l.game);
    if (strategy_out == "-") {
      std::cout << text;
    } else {
      std::ofstream out(strategy_out);
      if (!out) throw Failure{kUsage, "cannot write " + strategy_out};
      out << text;
    }
  }
  if (stats) print_stats(std::cout, res, kv);
  return kOk;
}

int cmd_check(const std::string& path) {
  Loaded l = load(path);
  if (l.game.size() > 16) throw Failure{kUsage, "check is limited to 16 vertices"};
  SolveOptions opt;
  opt.record = true;
  SolveResult res = solve(l.game, l.file.cond, opt);
  VertexSet truth;
  try {
    if (l.stochastic) {
      const auto& sg = std::get<StochasticGameGraph>(l.file.arena);
      truth = mdp_almost_sure_oracle(sg, as_gen_rabin(l.game, l.file.cond));
    } else {
      auto enc = encode_for_oracle(l.game, l.file.cond);
      bool plain = true;
      for (const auto& p : enc.cond.pairs) plain = plain && p.G.size() == 1;
      truth = plain ? brute_force_region(enc.game, enc.cond) : brute_force_region_generalized(l.game, l.file.cond);
    }
  } catch (const std::length_error& e) {
    throw Failure{kUsage, std::string("oracle: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, std::string("oracle: ") + e.what()};
  }
  std::cout << "solver: " << names(l.game, res.region) << "\n";
  std::cout << "oracle: " << names(l.game, truth) << "\n";
  if (truth != res.region) {
    std::cout << "regions differ\n";
    return kMismatch;
  }
  if (!l.stochastic) {
    auto enc = encode_for_oracle(l.game, l.file.cond);
    auto s = adapt_strategy(enc.game, enc.sinks, extract_p0_strategy(l.game, l.file.cond, res));
    auto v = verify_strategy_sound(enc.game, enc.cond, res.region, s);
    if (!v.pass) {
      std::cout << "strategy loses from " << l.game.name(v.counterexample) << ": " << v.reason << "\n";
      return kMismatch;
    }
    std::cout << "strategy: sound\n";
  }
  std::cout << "agree\n";
  return kOk;
}

int cmd_steps(const std::string& path, const std::vector<int>& bounds) {
  Loaded l = load(path);
  std::printf("%6s %12s %10s\n", "M", "steps", "|region|");
  VertexSet first;
  bool same = true;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    SolveOptions opt;
    opt.accel = bounds[i];
    auto res = solve(l.game, l.file.cond, opt);
    if (i == 0) first = res.region;
    same = same && res.region == first;
    std::printf("%6d %12llu %10zu\n", bounds[i], static_cast<unsigned long long>(res.steps.total()),
                res.region.count());
  }
  if (!same) {
    std::printf("regions differ across bounds\n");
    return kMismatch;
  }
  return kOk;
}

int cmd_derand(const std::string& path) {
  GameFile f = parse_game(path);
  auto* sg = std::get_if<StochasticGameGraph>(&f.arena);
  GameGraph g = sg ? derand(*sg) : std::get<GameGraph>(f.arena);
  std::cout << emit_game(g, f.cond);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair adversarial game solver"};
  app.require_subcommand(1);

  std::string file, strategy_out;
  int accel = 0, jobs = 1;
  bool frames = false, stats = false, kv = false;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the winning region");
  solve_cmd->add_option("file", file, "game file")->required();
  solve_cmd->add_option("--accel", accel, "acceleration bound M (0 = off)")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--strategy", strategy_out, "write the P0 strategy to a file ('-' for stdout)");
  solve_cmd->add_flag("--frames", frames, "print rank tables");
  solve_cmd->add_flag("--stats", stats, "print step and iteration counts");
  solve_cmd->add_flag("--kv", kv, "with --stats, also print key=value lines");
  solve_cmd->add_option("--jobs", jobs, "worker cap (the solver runs single-threaded)")->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("check", "Cross-check against the brute-force oracle");
  check_cmd->add_option("file", file, "game file")->required();

  std::uint64_t seed = 1;
  int n = 8, k = 1, gadget = 0;
  double owner = 0.5, live = 0.05, member = 0.05;
  bool mdp = false;
  std::string out_path;
  auto* bench_cmd = app.add_subcommand("bench", "Emit a generated instance");
  bench_cmd->add_option("--seed", seed, "random seed");
  bench_cmd->add_option("--n", n, "vertex count")->check(CLI::Range(2, 1 << 20));
  bench_cmd->add_option("--k", k, "pair count")->check(CLI::Range(1, 64));
  bench_cmd->add_option("--owner", owner, "fraction of P0 vertices")->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--live", live, "fraction of live P1 edges")->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--member", member, "set membership probability")->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_flag("--mdp", mdp, "1.5-player instance with random vertices");
  bench_cmd->add_option("--gadget", gadget, "gadget chain of this length instead")->check(CLI::PositiveNumber);
  bench_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* derand_cmd = app.add_subcommand("derand", "Turn random vertices into P1 vertices with live edges");
  derand_cmd->add_option("file", file, "stochastic game file")->required();

  std::vector<int> bounds{0, 2, 4, 16};
  auto* steps_cmd = app.add_subcommand("steps", "Step counts per acceleration bound");
  steps_cmd->add_option("file", file, "game file")->required();
  steps_cmd->add_option("--accel", bounds, "bounds to compare")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(file, accel, strategy_out, frames, stats, kv);
    if (*check_cmd) return cmd_check(file);
    if (*steps_cmd) return cmd_steps(file, bounds);
    if (*derand_cmd) return cmd_derand(file);
    if (*bench_cmd) {
      std::string text;
      if (gadget > 0) {
        auto gc = gadget_chain(gadget);
        text = emit_game(gc.game, gc.cond);
      } else if (mdp) {
        auto r = random_mdp(seed, n, k, 0.5, member);
        text = emit_game(GameFile{r.game, r.cond});
      } else {
        auto r = random_fair_game(seed, n, k, owner, live, member);
        text = emit_game(r.game, r.cond);
      }
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw Failure{kUsage, "cannot write " + out_path};
        out << text;
      }
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.msg << "\n";
    return f.code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
