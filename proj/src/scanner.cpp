#include "periodeq/scanner.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <set>

#include "periodeq/number_theory.hpp"

namespace periodeq {

namespace {

ScanError as_scan_error(const MathError& err, const WorkUnit& u) {
  return ScanError(err.kind(), u.e, u.f,
                   "(e=" + std::to_string(u.e) + ", f=" + std::to_string(u.f) +
                       "): " + std::string(to_string(err.kind())) + ": " + err.what());
}

ClassificationRecord classify_unit(const WorkUnit& u) {
  ClassificationRecord rec = classify(make_context(u.e, u.f));
  if (std::string why = validate(rec); !why.empty()) {
    throw MathError(ErrorKind::InvariantViolation, why);
  }
  return rec;
}

std::vector<ClassificationRecord> classify_serial(const std::vector<WorkUnit>& units) {
  std::vector<ClassificationRecord> out;
  out.reserve(units.size());
  for (const auto& u : units) {
    try {
      out.push_back(classify_unit(u));
    } catch (const MathError& err) {
      throw as_scan_error(err, u);
    }
  }
  return out;
}

std::vector<ClassificationRecord> classify_parallel(const std::vector<WorkUnit>& units,
                                                    int workers) {
  std::vector<std::optional<ClassificationRecord>> slots(units.size());
  std::vector<std::exception_ptr> errors(units.size());
  const long n = static_cast<long>(units.size());
  // Units are independent; heavy ones (large e) sit at the end, so hand out
  // single units dynamically.
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      slots[i] = classify_unit(units[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  // Merge in key order; the first failing unit by (e, f) wins.
  std::vector<ClassificationRecord> out;
  out.reserve(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const MathError& err) {
        throw as_scan_error(err, units[i]);
      }
    }
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

std::vector<ClassificationRecord> classify_units(const std::vector<WorkUnit>& units,
                                                 int workers) {
  return workers <= 1 ? classify_serial(units) : classify_parallel(units, workers);
}

std::vector<std::uint64_t> fast_doublets(std::uint64_t e_min, std::uint64_t e_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t e = std::max<std::uint64_t>(e_min, 2); e <= e_max; ++e) {
    if (is_prime(e + 1) && is_prime(2 * e + 1)) out.push_back(e);
  }
  return out;
}

ScanReport assemble(const ScanSpec& spec, std::vector<ClassificationRecord> records) {
  ScanReport report;
  report.spec = spec;
  if (spec.mode == ScanMode::FastDoublet) {
    report.doublets = fast_doublets(spec.e_min, spec.e_max);
    return report;
  }
  report.records = std::move(records);
  for (std::uint64_t e = spec.e_min; e <= spec.e_max; ++e) report.monogenic_map[e];
  for (const auto& r : report.records) {
    if (r.monogenic) report.monogenic_map[r.e].push_back(r.f);
    if (violates_conjecture(r)) report.counterexamples.push_back(r);
  }
  for (const auto& [e, fs] : report.monogenic_map) {
    if (fs.empty()) report.missing_e.push_back(e);
    const bool direct = std::find(fs.begin(), fs.end(), 1) != fs.end();
    const bool reduced = std::find(fs.begin(), fs.end(), 2) != fs.end();
    if (direct && reduced) report.doublets.push_back(e);
  }
  return report;
}

}  // namespace

std::string_view to_string(ScanMode mode) noexcept {
  return mode == ScanMode::Full ? "full" : "fast";
}

ScanError::ScanError(ErrorKind kind, std::uint64_t e, std::uint64_t f, const std::string& what)
    : MathError(kind, what), e_(e), f_(f) {}

void check_spec(const ScanSpec& spec) {
  if (spec.e_min < 1 || spec.e_min > spec.e_max) {
    throw MathError(ErrorKind::InvalidArgument, "need 1 <= e_min <= e_max");
  }
  if (spec.p_bound < spec.e_min + 1) {
    throw MathError(ErrorKind::InvalidArgument, "need p_bound >= e_min + 1");
  }
  if (spec.workers < 1) {
    throw MathError(ErrorKind::InvalidArgument, "need at least one worker");
  }
}

std::vector<WorkUnit> work_units(const ScanSpec& spec) {
  std::vector<WorkUnit> units;
  for (std::uint64_t e = spec.e_min; e <= spec.e_max; ++e) {
    for (std::uint64_t f = 1; e * f + 1 <= spec.p_bound; ++f) {
      const std::uint64_t p = e * f + 1;
      if (p >= 3 && is_prime(p)) units.push_back({e, f});
    }
  }
  return units;
}

ScanReport scan(const ScanSpec& spec) {
  check_spec(spec);
  if (spec.mode == ScanMode::FastDoublet) return assemble(spec, {});
  return assemble(spec, classify_units(work_units(spec), spec.workers));
}

ScanReport scan_serial(const ScanSpec& spec) {
  check_spec(spec);
  if (spec.mode == ScanMode::FastDoublet) return assemble(spec, {});
  return assemble(spec, classify_serial(work_units(spec)));
}

bool violates_conjecture(const ClassificationRecord& r) {
  if (r.e < 4) return false;
  const bool expected = r.f == 1 || r.f == 2;
  if (r.monogenic != expected) return true;
  if (!r.monogenic) return false;
  if (r.f == 1) return r.match_kind != MatchKind::DirectCyclotomic;
  return r.match_kind != MatchKind::ReducedCyclotomic;
}

std::vector<std::uint64_t> missing_e_census(std::uint64_t e_max, std::uint64_t p_bound,
                                            int workers) {
  if (e_max < 4) throw MathError(ErrorKind::InvalidArgument, "need e_max >= 4");
  ScanSpec spec{4, e_max, p_bound, ScanMode::Full, workers};
  return scan(spec).missing_e;
}

DoubletSurvey doublet_survey(std::uint64_t e_max, ScanMode mode, int workers) {
  if (e_max < 4) throw MathError(ErrorKind::InvalidArgument, "need e_max >= 4");
  DoubletSurvey out;
  out.mode = mode;
  out.e_max = e_max;
  std::vector<std::uint64_t> all;
  if (mode == ScanMode::FastDoublet) {
    all = fast_doublets(2, e_max);
  } else {
    std::vector<WorkUnit> units;
    for (std::uint64_t e = 2; e <= e_max; ++e) {
      if (is_prime(e + 1)) units.push_back({e, 1});
      if (is_prime(2 * e + 1)) units.push_back({e, 2});
    }
    std::set<std::uint64_t> direct;
    std::set<std::uint64_t> reduced;
    for (const auto& r : classify_units(units, workers)) {
      if (!r.monogenic) continue;
      (r.f == 1 ? direct : reduced).insert(r.e);
    }
    for (std::uint64_t e : direct) {
      if (reduced.count(e)) all.push_back(e);
    }
  }
  out.count_from_2 = all.size();
  for (std::uint64_t e : all) {
    if (e >= 4) out.doublets.push_back(e);
  }
  out.count_from_4 = out.doublets.size();
  return out;
}

CubicGrowth cubic_growth(std::uint64_t p_bound, int workers) {
  CubicGrowth out;
  out.p_bound = p_bound;
  std::vector<WorkUnit> units;
  for (std::uint64_t f = 2; 3 * f + 1 <= p_bound; f += 2) {
    if (is_prime(3 * f + 1)) units.push_back({3, f});
  }
  const auto records = classify_units(units, workers);
  out.classified = records.size();
  for (const auto& r : records) {
    if (r.monogenic) out.monogenic_p.push_back(r.p);
  }

  std::vector<std::uint64_t> bounds;
  for (std::uint64_t b = 100; b <= p_bound; b *= 10) {
    bounds.push_back(b);
    if (b > std::numeric_limits<std::uint64_t>::max() / 10) break;
  }
  if (bounds.empty() || bounds.back() != p_bound) bounds.push_back(p_bound);
  for (std::uint64_t b : bounds) {
    GrowthPoint pt{b, 0, 0};
    for (const auto& r : records) {
      if (r.p > b) break;
      ++pt.classified;
      if (r.monogenic) ++pt.cumulative_monogenic;
    }
    out.checkpoints.push_back(pt);
  }

  // least squares of log(count) against log(bound)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (const auto& pt : out.checkpoints) {
    if (pt.cumulative_monogenic == 0) continue;
    const double x = std::log(static_cast<double>(pt.bound));
    const double y = std::log(static_cast<double>(pt.cumulative_monogenic));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double denom = static_cast<double>(n) * sxx - sx * sx;
  out.log_log_slope = (n >= 2 && denom > 0)
                          ? (static_cast<double>(n) * sxy - sx * sy) / denom
                          : std::numeric_limits<double>::quiet_NaN();
  return out;
}

std::vector<ClassificationRecord> conjecture_check(std::uint64_t e_min, std::uint64_t e_max,
                                                   std::uint64_t p_bound, int workers) {
  if (e_min < 4) throw MathError(ErrorKind::InvalidArgument, "need e_min >= 4");
  ScanSpec spec{e_min, e_max, p_bound, ScanMode::Full, workers};
  return scan(spec).counterexamples;
}

}  // namespace periodeq
