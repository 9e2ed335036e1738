#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wittsum/report.hpp"

using namespace wittsum;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Err::BudgetExceeded:
    case Err::CapExceeded:
    case Err::EnumerationBudgetExceeded:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exponential sums of Witt coverings: L-functions and polygon verification"};
  app.require_subcommand(1);

  std::string input_path, json_path, plot_path;
  long long kmax = 0, guard = 0, budget = 0, twist = 0;
  int smax = 0, threads = 1;

  std::vector<std::pair<std::string, Command>> cmds = {
      {"decompose", Command::decompose}, {"polytope", Command::polytope},
      {"nondegen", Command::nondegen},   {"sums", Command::sums},
      {"lfunction", Command::lfunction}, {"verify", Command::verify}};
  Command selected = Command::verify;
  for (auto& [name, cmd] : cmds) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--input", input_path, "job file (JSON)")->required();
    sub->add_option("--kmax", kmax, "number of exponential sums to compute");
    sub->add_option("--guard", guard, "extra vanishing-tail terms past the expected degree");
    sub->add_option("--smax", smax, "extension search bound for n=3 non-degeneracy");
    sub->add_option("--threads", threads, "worker threads for the torus sums");
    sub->add_option("--budget", budget, "total torus-evaluation budget");
    sub->add_option("--twist", twist, "Galois twist s (coprime to p): zeta -> zeta^s");
    sub->add_option("--json", json_path, "write the full report to this file");
    sub->add_option("--plot", plot_path, "write an SVG with the polygons to this file");
    Command c = cmd;
    sub->callback([&selected, c] { selected = c; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "cannot open input file: " << input_path << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    JobSpec job = parse_job(buf.str());
    if (kmax > 0) job.kmax = kmax;
    if (guard > 0) job.guard = guard;
    if (smax > 0) job.smax = smax;
    if (budget > 0) job.budget = budget;
    if (twist > 0) job.twist = twist;

    auto t0 = std::chrono::steady_clock::now();
    Pipeline pl = run_pipeline(job, selected, threads);
    auto t1 = std::chrono::steady_clock::now();

    std::cout << report_summary(pl, selected);
    std::cerr << "elapsed: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms\n";

    if (!json_path.empty()) {
      std::ofstream out(json_path);
      out << report_json(pl, selected);
    }
    if (!plot_path.empty()) {
      // plotting is best-effort and never affects exit codes
      try {
        PolygonChain np, hp;
        if (pl.report) {
          np = pl.report->np;
          hp = pl.report->hp;
        } else if (pl.hd) {
          hp = pl.hd->hodge;
        }
        std::ofstream out(plot_path);
        out << polygon_svg(np, hp);
      } catch (...) {
        std::cerr << "plot generation failed\n";
      }
    }
    return report_exit_code(pl, selected);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
