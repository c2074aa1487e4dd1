#include "chg/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "chg/bounds.hpp"
#include "chg/construct.hpp"
#include "chg/grid2d.hpp"
#include "chg/search.hpp"
#include "chg/seqstats.hpp"
#include "chg/verify.hpp"

namespace chg::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string join(const std::vector<Element>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::holds: return kExitHolds;
    case Verdict::violated: return kExitViolated;
    case Verdict::undecided: return kExitUndecided;
  }
  return kExitUndecided;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

struct HG {
  int h = 0;
  int g = 0;
  bool weak = false;
  [[nodiscard]] Params params() const { return Params{h, g, weak ? Mode::weak : Mode::strict}; }
};

void add_hg(CLI::App* app, HG& hg, bool with_weak) {
  app->add_option("--h", hg.h, "pattern size h (>= 2)")->required();
  app->add_option("--g", hg.g, "number of translates g (>= 2)")->required();
  if (with_weak) app->add_flag("--weak", hg.weak, "require the translates to be pairwise disjoint");
}

std::string set_header(const std::string& what, const Params& p) {
  return "# " + what + " h=" + std::to_string(p.h) + " g=" + std::to_string(p.g) +
         " mode=" + to_string(p.mode) + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, search and measure C_h[g] integer sets", "chg"};
  app.set_help_flag("--help", "print this help and exit");  // -h is taken by --h
  app.require_subcommand(1);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "decide the (weak) C_h[g] property of a set file");
  std::string set_path;
  HG vhg;
  bool show_witnesses = false;
  std::uint64_t budget = 1'000'000;
  std::size_t max_witnesses = 16;
  verify_cmd->add_option("--set", set_path, "set file")->required();
  add_hg(verify_cmd, vhg, true);
  verify_cmd->add_flag("--witnesses", show_witnesses, "print violation witnesses");
  verify_cmd->add_option("--budget", budget, "node budget per independent-set search");
  verify_cmd->add_option("--max-witnesses", max_witnesses, "witness cap");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "build sets");
  construct_cmd->require_subcommand(1);
  auto* rd_cmd = construct_cmd->add_subcommand("random-deletion", "sample and delete bad elements");
  std::uint64_t rd_n = 0, seed = 0, retries = 0;
  HG rhg;
  std::string out_path, trace_path;
  rd_cmd->add_option("--n", rd_n, "universe [1,n]")->required();
  add_hg(rd_cmd, rhg, false);
  rd_cmd->add_option("--seed", seed, "RNG seed")->required();
  rd_cmd->add_option("--retries", retries, "extra trials until the size thresholds hold");
  rd_cmd->add_option("--budget", budget, "node budget for the bad-element search");
  rd_cmd->add_option("--out", out_path, "also write the result set here");
  rd_cmd->add_option("--trace", trace_path, "write the key=value trace here");

  auto* greedy_cmd = construct_cmd->add_subcommand("greedy", "greedy scan of [1,n]");
  std::uint64_t greedy_n = 0;
  HG ghg;
  greedy_cmd->add_option("--n", greedy_n, "universe [1,n]")->required();
  add_hg(greedy_cmd, ghg, true);
  greedy_cmd->add_option("--budget", budget, "node budget in weak mode");
  greedy_cmd->add_option("--out", out_path, "also write the set here");

  auto* sidon_cmd = construct_cmd->add_subcommand("sidon", "Sidon set {2qi + (i^2 mod q)}");
  std::uint64_t prime = 0;
  sidon_cmd->add_option("--prime", prime, "prime q")->required();
  sidon_cmd->add_option("--out", out_path, "also write the set here");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the size bounds and sampling density");
  std::uint64_t bounds_n = 0;
  HG bhg;
  bool rigorous = false;
  bounds_cmd->add_option("--n", bounds_n, "n")->required();
  add_hg(bounds_cmd, bhg, false);
  bounds_cmd->add_flag("--rigorous", rigorous, "also compute the finite-n bound");

  // search
  auto* search_cmd = app.add_subcommand("search", "exact extremal table for n = 1..nmax");
  std::uint64_t nmax = 0;
  HG shg;
  double timeout = 0;
  bool no_pruning = false;
  search_cmd->add_option("--nmax", nmax, "largest n (<= 64)")->required();
  add_hg(search_cmd, shg, true);
  search_cmd->add_option("--timeout", timeout, "seconds per row (0 = unlimited)");
  search_cmd->add_flag("--no-bound-pruning", no_pruning, "do not prune with the finite-n bound");

  // blocks
  auto* blocks_cmd = app.add_subcommand("blocks", "block counts over [0,N^2)");
  std::uint64_t blocks_N = 0;
  HG khg;
  blocks_cmd->add_option("--set", set_path, "set file")->required();
  blocks_cmd->add_option("--N", blocks_N, "block length and count")->required();
  add_hg(blocks_cmd, khg, false);

  // tau
  auto* tau_cmd = app.add_subcommand("tau", "finite-data upper estimate of tau(m)");
  std::uint64_t tau_m = 0;
  int tau_h = 2;
  std::vector<std::uint64_t> xs;
  tau_cmd->add_option("--set", set_path, "set file")->required();
  tau_cmd->add_option("--m", tau_m, "m")->required();
  tau_cmd->add_option("--h", tau_h, "h (default 2)");
  tau_cmd->add_option("--x", xs, "sample points (default m, 2m, 4m, ..., max)");

  // grid2d
  auto* grid_cmd = app.add_subcommand("grid2d", "translated patterns in [1,n]^2");
  grid_cmd->require_subcommand(1);
  auto* gverify_cmd = grid_cmd->add_subcommand("verify", "decide the property for a point file");
  std::string points_path;
  HG gvhg;
  gverify_cmd->add_option("--points", points_path, "point file")->required();
  add_hg(gverify_cmd, gvhg, true);
  gverify_cmd->add_flag("--witnesses", show_witnesses, "print violation witnesses");
  gverify_cmd->add_option("--budget", budget, "node budget per independent-set search");
  gverify_cmd->add_option("--max-witnesses", max_witnesses, "witness cap");

  auto* ggreedy_cmd = grid_cmd->add_subcommand("greedy", "greedy scan of the grid");
  std::uint64_t grid_n = 0;
  HG gghg;
  std::string order = "row-major";
  ggreedy_cmd->add_option("--n", grid_n, "grid side")->required();
  add_hg(ggreedy_cmd, gghg, true);
  ggreedy_cmd->add_option("--order", order, "row-major or random")
      ->check(CLI::IsMember({"row-major", "random"}));
  ggreedy_cmd->add_option("--seed", seed, "RNG seed (required for random order)");

  auto* gdensity_cmd = grid_cmd->add_subcommand("density", "greedy size against n and n^{4/3}");
  std::vector<std::uint64_t> grid_ns;
  HG gdhg;
  gdensity_cmd->add_option("--n-values", grid_ns, "grid sides")->required()->delimiter(',');
  add_hg(gdensity_cmd, gdhg, true);
  gdensity_cmd->add_option("--order", order, "row-major or random")
      ->check(CLI::IsMember({"row-major", "random"}));
  gdensity_cmd->add_option("--seed", seed, "RNG seed (required for random order)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify_cmd) {
      const auto set = read_set_file(set_path);
      const auto report = verify(set, vhg.params(), VerifyOptions{max_witnesses, budget});
      out << "RESULT=" << to_string(report.verdict) << '\n'
          << "h=" << vhg.h << '\n'
          << "g=" << vhg.g << '\n'
          << "mode=" << to_string(vhg.params().mode) << '\n'
          << "size=" << set.size() << '\n'
          << "shapes_examined=" << report.shapes_examined << '\n'
          << "budget_exhausted=" << (report.budget_exhausted ? "true" : "false") << '\n';
      if (show_witnesses)
        for (const auto& w : report.witnesses)
          out << "WITNESS shape=" << to_string(w.shape) << " offsets=" << join(w.offsets, ',')
              << " disjoint=" << (w.disjoint ? "true" : "false") << '\n';
      return exit_for(report.verdict);
    }

    if (*construct_cmd) {
      IntegerSet result;
      std::string header;
      if (*rd_cmd) {
        const auto t = random_deletion(rd_n, rhg.params(), seed, retries, budget);
        const auto trace = format_trace(t);
        if (!trace_path.empty()) write_file(trace_path, trace);
        std::istringstream lines(trace);
        for (std::string line; std::getline(lines, line);) header += "# " + line + "\n";
        if (!t.success) err << "warning: size thresholds not met after " << t.attempts << " trial(s)\n";
        result = t.result;
      } else if (*greedy_cmd) {
        result = greedy(greedy_n, ghg.params(), budget);
        header = set_header("greedy n=" + std::to_string(greedy_n), ghg.params());
      } else {
        result = sidon_erdos_turan(prime);
        header = "# sidon q=" + std::to_string(prime) + "\n";
      }
      out << header;
      write_set(out, result);
      if (!out_path.empty()) write_file(out_path, format_set(result));
      return 0;
    }

    if (*bounds_cmd) {
      const auto n = bounds_n;
      out << "n=" << n << '\n' << "h=" << bhg.h << '\n' << "g=" << bhg.g << '\n';
      out << "leading=" << format_double(thm1_leading(n, bhg.h, bhg.g)) << '\n';
      if (rigorous) out << "rigorous=" << thm1_rigorous(n, bhg.h, bhg.g) << '\n';
      out << "thm2_exponent=" << format_double(thm2_exponent(bhg.h, bhg.g)) << '\n';
      if (n >= 2) {
        const double p = deletion_p(n, bhg.h, bhg.g);
        out << "p=" << format_double(p) << '\n'
            << "np=" << format_double(p * static_cast<double>(n)) << '\n';
      }
      return 0;
    }

    if (*search_cmd) {
      SearchOptions opts;
      opts.time_budget = std::chrono::duration<double>(timeout);
      opts.use_bound_pruning = !no_pruning;
      const auto rows = extremal_table(nmax, shg.params(), opts);
      out << format_table_csv(rows);
      return 0;
    }

    if (*blocks_cmd) {
      const auto set = read_set_file(set_path);
      out << format_profile_csv(block_profile(set, blocks_N, khg.params()));
      return 0;
    }

    if (*tau_cmd) {
      const auto set = read_set_file(set_path);
      if (set.empty()) throw EmptySample("set is empty");
      if (xs.empty()) xs = geometric_samples(tau_m, set.max());
      out << "m=" << tau_m << '\n' << "h=" << tau_h << '\n';
      for (auto x : xs)
        out << "x=" << x << " count=" << counting_function(set, x)
            << " statistic=" << format_double(thm3_statistic(set, static_cast<double>(x), tau_h))
            << '\n';
      out << "tau_upper_estimate=" << format_double(tau(set, tau_m, xs, tau_h)) << '\n';
      return 0;
    }

    if (*grid_cmd) {
      auto scan = [&]() {
        if (order == "random") {
          if (ggreedy_cmd->count("--seed") + gdensity_cmd->count("--seed") > 0)
            return grid::ScanOrder::random;
          throw UsageError("--order random requires --seed");
        }
        return grid::ScanOrder::row_major;
      };
      if (*gverify_cmd) {
        const auto pts = grid::read_points_file(points_path);
        const auto report =
            grid::is_grid_chg(pts, gvhg.params(), VerifyOptions{max_witnesses, budget});
        out << "RESULT=" << to_string(report.verdict) << '\n'
            << "h=" << gvhg.h << '\n'
            << "g=" << gvhg.g << '\n'
            << "mode=" << to_string(gvhg.params().mode) << '\n'
            << "size=" << pts.size() << '\n'
            << "shapes_examined=" << report.shapes_examined << '\n'
            << "budget_exhausted=" << (report.budget_exhausted ? "true" : "false") << '\n';
        if (show_witnesses)
          for (const auto& w : report.witnesses) {
            out << "WITNESS shape=" << grid::to_string(w.shape) << " offsets=";
            for (std::size_t i = 0; i < w.offsets.size(); ++i)
              out << (i ? "," : "") << '(' << w.offsets[i].first << ',' << w.offsets[i].second << ')';
            out << " disjoint=" << (w.disjoint ? "true" : "false") << '\n';
          }
        return exit_for(report.verdict);
      }
      if (*ggreedy_cmd) {
        const auto set = grid::grid_greedy(grid_n, gghg.params(), scan(), seed);
        out << "# grid greedy n=" << grid_n << " h=" << gghg.h << " g=" << gghg.g
            << " mode=" << to_string(gghg.params().mode) << " order=" << order << '\n';
        grid::write_points(out, set);
        return 0;
      }
      const auto sc = scan();
      out << "n,size,size_over_n,size_over_n43\n";
      for (auto n : grid_ns) {
        const auto set = grid::grid_greedy(n, gdhg.params(), sc, seed);
        const double size = static_cast<double>(set.size());
        const double nd = static_cast<double>(n);
        out << n << ',' << set.size() << ',' << format_double(size / nd) << ','
            << format_double(size / std::pow(nd, 4.0 / 3.0)) << '\n';
      }
      return 0;
    }
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace chg::cli
