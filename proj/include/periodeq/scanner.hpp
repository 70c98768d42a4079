#ifndef PERIODEQ_SCANNER_HPP
#define PERIODEQ_SCANNER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "periodeq/error.hpp"
#include "periodeq/monogeneity.hpp"

namespace periodeq {

enum class ScanMode {
  Full,         // classify every (e, f)
  FastDoublet,  // doublets from primality of e+1 and 2e+1 alone; relies on the conjecture
};

std::string_view to_string(ScanMode mode) noexcept;

struct ScanSpec {
  std::uint64_t e_min = 4;
  std::uint64_t e_max = 4;
  std::uint64_t p_bound = 5;
  ScanMode mode = ScanMode::Full;
  int workers = 1;
};

/// Throws InvalidArgument unless 1 <= e_min <= e_max, p_bound >= e_min + 1
/// and workers >= 1.
void check_spec(const ScanSpec& spec);

struct ScanReport {
  ScanSpec spec;
  std::vector<ClassificationRecord> records;                   // sorted by (e, f)
  std::map<std::uint64_t, std::vector<std::uint64_t>> monogenic_map;  // every e in range
  std::vector<std::uint64_t> missing_e;
  std::vector<std::uint64_t> doublets;
  std::vector<ClassificationRecord> counterexamples;
};

/// Raised when classification of one work unit hits a hard error.
class ScanError : public MathError {
 public:
  ScanError(ErrorKind kind, std::uint64_t e, std::uint64_t f, const std::string& what);
  std::uint64_t e() const noexcept { return e_; }
  std::uint64_t f() const noexcept { return f_; }

 private:
  std::uint64_t e_;
  std::uint64_t f_;
};

struct WorkUnit {
  std::uint64_t e;
  std::uint64_t f;
  bool operator==(const WorkUnit&) const = default;
};

/// Every (e, f) with e in [e_min, e_max] and e*f+1 a prime <= p_bound, sorted.
std::vector<WorkUnit> work_units(const ScanSpec& spec);

/// Parallel scan over work units with an OpenMP team of spec.workers.
/// Results land in a slot per unit, so output is independent of scheduling.
ScanReport scan(const ScanSpec& spec);

/// Single-threaded reference implementation of scan().
ScanReport scan_serial(const ScanSpec& spec);

/// True when the record breaks the two-class pattern: for e >= 4 it must be
/// monogenic exactly when f is 1 or 2, matching Phi_p directly for f = 1 and
/// after unfolding for f = 2.
bool violates_conjecture(const ClassificationRecord& record);

/// e in [4, e_max] with no monogenic period equation for primes <= p_bound.
std::vector<std::uint64_t> missing_e_census(std::uint64_t e_max, std::uint64_t p_bound,
                                            int workers = 1);

struct DoubletSurvey {
  ScanMode mode = ScanMode::FastDoublet;
  std::uint64_t e_max = 0;
  std::vector<std::uint64_t> doublets;  // e >= 4
  std::size_t count_from_4 = 0;
  // Same count when e = 2 (3 and 5 prime, quadratics always monogenic) is
  // admitted; only reported, never mixed into `doublets`.
  std::size_t count_from_2 = 0;
};

/// FastDoublet lists e with e+1 and 2e+1 prime; Full classifies (e, 1) and
/// (e, 2) and keeps e only if both are monogenic.
DoubletSurvey doublet_survey(std::uint64_t e_max, ScanMode mode, int workers = 1);

struct GrowthPoint {
  std::uint64_t bound;
  std::size_t cumulative_monogenic;
  std::size_t classified;
};

struct CubicGrowth {
  std::uint64_t p_bound = 0;
  std::vector<std::uint64_t> monogenic_p;  // every p = 3f+1 <= p_bound with k = 1
  std::size_t classified = 0;
  std::vector<GrowthPoint> checkpoints;    // 10^2, 10^3, ... and p_bound itself
  double log_log_slope = 0.0;              // NaN with fewer than two usable points
  static constexpr std::string_view kInterpretation =
      "e = 3 fixed; the bound applies to the prime p = 3f + 1";
};

CubicGrowth cubic_growth(std::uint64_t p_bound, int workers = 1);

/// Records for e in [e_min, e_max] breaking the two-class pattern.
std::vector<ClassificationRecord> conjecture_check(std::uint64_t e_min, std::uint64_t e_max,
                                                   std::uint64_t p_bound, int workers = 1);

}  // namespace periodeq

#endif  // PERIODEQ_SCANNER_HPP
