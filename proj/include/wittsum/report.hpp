#pragma once

#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "wittsum/lfunction.hpp"

namespace wittsum {

// One verification job: the Witt vector, the field, and the knobs.
struct JobSpec {
  long long p = 2;
  int a = 1;
  int m = 1;
  int n = 1;
  std::optional<std::vector<int32_t>> modulus;
  // per level: monomials (exponent vector, coefficient coordinates over F_p)
  std::vector<std::vector<std::pair<ExpVec, std::vector<int32_t>>>> witt_coords;
  std::vector<int> J;
  std::optional<long long> kmax;
  std::optional<long long> guard;
  std::optional<int> smax;
  std::optional<long long> budget;
  std::optional<double> tolerance;
  std::optional<long long> twist;

  bool operator==(const JobSpec&) const = default;
};

JobSpec parse_job(const std::string& text);
std::string serialize_job(const JobSpec& job);  // canonical form

enum class Command { decompose, polytope, nondegen, sums, lfunction, verify };

std::optional<Command> command_from_string(const std::string& s);

// Everything a run produced; later stages are empty when the command did not
// need them.
struct Pipeline {
  JobSpec job;
  Limits lim;
  std::shared_ptr<FieldCtx> Fq;
  WittLaurent f;
  DecomposedWitt dec;
  std::optional<NewtonData> nd;
  std::optional<HodgeData> hd;
  std::optional<CommodeResult> commode;
  std::optional<NondegenVerdict> nondeg;
  std::vector<SumResult> sums;
  std::optional<LSeries> series;
  std::optional<LPolynomial> poly;
  std::optional<RationalFn> ratfn;
  std::optional<std::string> route_note;  // why the rational route was taken
  std::optional<VerificationReport> report;
  long long K = 0;
};

Pipeline run_pipeline(const JobSpec& job, Command cmd, int threads = 1);

// Deterministic JSON report: exact values as integer arrays and
// numerator/denominator pairs; floats confined to the weight-check section.
std::string report_json(const Pipeline& pl, Command cmd);

// Human-readable summary for the terminal.
std::string report_summary(const Pipeline& pl, Command cmd);

// 0 = all applicable verdicts passed (or informational command), 1 = a
// verdict failed.
int report_exit_code(const Pipeline& pl, Command cmd);

// standalone SVG with the Newton and Hodge polygons overlaid
std::string polygon_svg(const PolygonChain& np, const PolygonChain& hp);

}  // namespace wittsum
