// Command-line front end: psi, classify, reduce, unfold, scan, doublets,
// cubic-growth, table1.
//
// Exit codes: 0 success, 2 usage or input error, 3 verification mismatch or
// counterexample, 4 internal mathematical contradiction.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "periodeq/cyclotomic.hpp"
#include "periodeq/error.hpp"
#include "periodeq/monogeneity.hpp"
#include "periodeq/number_theory.hpp"
#include "periodeq/period.hpp"
#include "periodeq/report.hpp"
#include "periodeq/scanner.hpp"
#include "periodeq/table1.hpp"

namespace {

using namespace periodeq;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitContradiction = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

ScanMode parse_mode(const std::string& text) {
  if (text == "full") return ScanMode::Full;
  if (text == "fast") return ScanMode::FastDoublet;
  throw UsageError("unknown mode '" + text + "' (expected full or fast)");
}

// "4:60" or "7"
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  auto to_u64 = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad e range '" + text + "'");
    }
    return static_cast<std::uint64_t>(std::stoull(s));
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const auto e = to_u64(text);
    return {e, e};
  }
  return {to_u64(text.substr(0, colon)), to_u64(text.substr(colon + 1))};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + out_path + "' for writing");
  out << text;
}

int run_psi(std::uint64_t e, std::uint64_t f, const std::string& method) {
  const PrimeContext ctx = make_context(e, f);
  const PeriodPolynomial psi =
      method == "exact" ? period_polynomial_exact(ctx) : period_polynomial_modular(ctx);
  std::cout << "degree " << *psi.poly.degree() << '\n'
            << "p " << ctx.p << '\n'
            << "g " << ctx.g << '\n'
            << "coeffs";
  for (const auto& c : psi.poly.coeffs_descending()) std::cout << ' ' << c.get_str();
  std::cout << '\n' << psi.poly.to_string() << '\n';
  return kExitOk;
}

int run_classify(std::uint64_t e, std::uint64_t f, OutputFormat format) {
  std::cout << render_record(classify(make_context(e, f)), format);
  return kExitOk;
}

int run_reduce(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw UsageError("p must be an odd prime, got " + std::to_string(p));
  std::cout << demoivre_reduce(cyclotomic_prime(p)).to_string() << '\n';
  return kExitOk;
}

int run_unfold(std::uint64_t e, std::uint64_t f) {
  const PrimeContext ctx = make_context(e, f);
  std::cout << demoivre_unfold(period_polynomial_modular(ctx).poly).to_string() << '\n';
  return kExitOk;
}

int run_scan(const std::string& range, std::uint64_t p_bound, const std::string& mode,
             int workers, OutputFormat format, const std::string& out_path) {
  ScanSpec spec;
  std::tie(spec.e_min, spec.e_max) = parse_range(range);
  spec.p_bound = p_bound;
  spec.mode = parse_mode(mode);
  spec.workers = workers;
  const ScanReport report = scan(spec);
  emit(render_report(report, format), out_path);

  std::size_t monogenic = 0;
  for (const auto& r : report.records) monogenic += r.monogenic ? 1 : 0;
  std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
  summary << "summary: records=" << report.records.size() << " monogenic=" << monogenic
          << " doublets=" << report.doublets.size()
          << " missing_e=" << report.missing_e.size()
          << " counterexamples=" << report.counterexamples.size()
          << " p_bound=" << spec.p_bound << " mode=" << to_string(spec.mode)
          << (spec.mode == ScanMode::FastDoublet ? " (conjecture-conditional)" : "") << '\n';
  for (const auto& r : report.counterexamples) {
    summary << "counterexample: e=" << r.e << " f=" << r.f << " p=" << r.p
            << " monogenic=" << (r.monogenic ? "yes" : "no")
            << " match=" << to_string(r.match_kind) << '\n';
  }
  return report.counterexamples.empty() ? kExitOk : kExitMismatch;
}

int run_doublets(std::uint64_t e_max, const std::string& mode, int workers,
                 OutputFormat format) {
  const DoubletSurvey survey = doublet_survey(e_max, parse_mode(mode), workers);
  const bool conditional = survey.mode == ScanMode::FastDoublet;
  if (format == OutputFormat::JSON) {
    nlohmann::ordered_json j;
    j["mode"] = std::string(to_string(survey.mode));
    j["conjecture_conditional"] = conditional;
    j["e_max"] = survey.e_max;
    j["doublets"] = survey.doublets;
    j["count_from_4"] = survey.count_from_4;
    j["count_from_2"] = survey.count_from_2;
    std::cout << j.dump(2) << '\n';
  } else if (format == OutputFormat::CSV) {
    std::cout << "e\n";
    for (auto e : survey.doublets) std::cout << e << '\n';
  } else {
    std::cout << "doublets for 4 <= e <= " << e_max << " (mode " << to_string(survey.mode)
              << (conditional ? ", conjecture-conditional" : ", verified by classification")
              << "):\n";
    for (std::size_t i = 0; i < survey.doublets.size(); ++i) {
      std::cout << (i ? ", " : "") << survey.doublets[i];
    }
    std::cout << "\ncount (e >= 4): " << survey.count_from_4
              << "\ncount (e >= 2): " << survey.count_from_2 << '\n';
  }
  return kExitOk;
}

int run_cubic_growth(std::uint64_t p_bound, int workers, OutputFormat format) {
  if (p_bound < 7) throw UsageError("--p-bound must be at least 7");
  const CubicGrowth g = cubic_growth(p_bound, workers);
  if (format == OutputFormat::CSV) {
    std::cout << "bound,classified,cumulative_monogenic\n";
    for (const auto& pt : g.checkpoints) {
      std::cout << pt.bound << ',' << pt.classified << ',' << pt.cumulative_monogenic << '\n';
    }
    return kExitOk;
  }
  if (format == OutputFormat::JSON) {
    nlohmann::ordered_json j;
    j["interpretation"] = std::string(CubicGrowth::kInterpretation);
    j["p_bound"] = g.p_bound;
    j["classified"] = g.classified;
    j["checkpoints"] = nlohmann::ordered_json::array();
    for (const auto& pt : g.checkpoints) {
      j["checkpoints"].push_back({{"bound", pt.bound},
                                  {"classified", pt.classified},
                                  {"cumulative_monogenic", pt.cumulative_monogenic}});
    }
    if (std::isfinite(g.log_log_slope)) {
      j["log_log_slope"] = g.log_log_slope;
    } else {
      j["log_log_slope"] = nullptr;
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "interpretation: " << CubicGrowth::kInterpretation << '\n'
            << "bound        classified   monogenic\n";
  for (const auto& pt : g.checkpoints) {
    std::cout << std::left << std::setw(13) << pt.bound << std::setw(13) << pt.classified
              << pt.cumulative_monogenic << '\n';
  }
  std::cout << "log-log slope: " << g.log_log_slope << '\n';
  return kExitOk;
}

int run_table1(const std::string& golden_path) {
  std::vector<Table1Row> rows;
  if (golden_path.empty()) {
    rows = table1_golden();
  } else {
    std::ifstream in(golden_path);
    if (!in) throw UsageError("cannot read '" + golden_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    rows = parse_table1(buf.str());
  }
  std::size_t passed = 0;
  for (const auto& check : check_table1(rows)) {
    std::cout << (check.pass ? "PASS" : "FAIL") << "  e=" << check.row.e
              << " p=" << check.row.p << " n_R=" << check.row.n_real << " D="
              << (check.row.d_sign < 0 ? "-" : "") << check.row.p << '^'
              << check.row.d_exponent;
    if (!check.pass) std::cout << "  " << check.detail;
    std::cout << '\n';
    passed += check.pass ? 1 : 0;
  }
  std::cout << rows.size() << " rows checked, " << passed << " pass\n";
  return passed == rows.size() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss period equations: construction, monogeneity, cyclotomic matching"};
  app.require_subcommand(1);

  std::uint64_t e = 0, f = 0, p = 0, p_bound = 0, e_max = 0;
  std::string format_name = "human", out_path, mode = "full", range, method = "modular";
  std::string golden, doublet_mode = "fast";
  int workers = default_workers();

  auto* psi = app.add_subcommand("psi", "print the period equation psi_e for p = e*f+1");
  psi->add_option("--e", e, "degree e")->required();
  psi->add_option("--f", f, "period length f")->required();
  psi->add_option("--method", method, "modular or exact")
      ->check(CLI::IsMember({"modular", "exact"}))
      ->capture_default_str();

  auto* cls = app.add_subcommand("classify", "classify one (e, f)");
  cls->add_option("--e", e, "degree e")->required();
  cls->add_option("--f", f, "period length f")->required();
  cls->add_option("--format", format_name, "human, csv or json")->capture_default_str();

  auto* red = app.add_subcommand("reduce", "de Moivre reduction of Phi_p");
  red->add_option("--p", p, "odd prime")->required();

  auto* unf = app.add_subcommand("unfold", "x^e psi_e(x + 1/x) for p = e*f+1");
  unf->add_option("--e", e, "degree e")->required();
  unf->add_option("--f", f, "period length f")->required();

  auto* scn = app.add_subcommand("scan", "classify every (e, f) with e*f+1 prime <= bound");
  scn->add_option("--e", range, "e range, e.g. 4:60")->required();
  scn->add_option("--p-bound", p_bound, "largest prime p considered")->required();
  scn->add_option("--mode", mode, "full or fast")->capture_default_str();
  scn->add_option("--workers", workers, "OpenMP threads")->capture_default_str();
  scn->add_option("--format", format_name, "human, csv or json")->capture_default_str();
  scn->add_option("--out", out_path, "write the report here instead of stdout");

  auto* dbl = app.add_subcommand("doublets", "degrees with monogenic psi_e at f = 1 and f = 2");
  dbl->add_option("--e-max", e_max, "largest e")->required();
  dbl->add_option("--mode", doublet_mode, "fast (conjecture-conditional) or full")
      ->capture_default_str();
  dbl->add_option("--workers", workers, "OpenMP threads")->capture_default_str();
  dbl->add_option("--format", format_name, "human, csv or json")->capture_default_str();

  auto* cub = app.add_subcommand("cubic-growth", "cumulative monogenic cubics by prime bound");
  cub->add_option("--p-bound", p_bound, "largest prime p = 3f+1")->required();
  cub->add_option("--workers", workers, "OpenMP threads")->capture_default_str();
  cub->add_option("--format", format_name, "human, csv or json")->capture_default_str();

  auto* tb1 = app.add_subcommand("table1", "regenerate the reference table and diff it");
  tb1->add_option("--golden", golden, "alternative golden rows file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OutputFormat format = parse_output_format(format_name);
    if (*psi) return run_psi(e, f, method);
    if (*cls) return run_classify(e, f, format);
    if (*red) return run_reduce(p);
    if (*unf) return run_unfold(e, f);
    if (*scn) return run_scan(range, p_bound, mode, workers, format, out_path);
    if (*dbl) return run_doublets(e_max, doublet_mode, workers, format);
    if (*cub) return run_cubic_growth(p_bound, workers, format);
    if (*tb1) return run_table1(golden);
  } catch (const MathError& err) {
    std::cerr << "error: " << err.what() << '\n';
    if (is_contradiction(err.kind())) {
      std::cerr << "internal contradiction (" << to_string(err.kind()) << ")\n";
      return kExitContradiction;
    }
    return kExitUsage;
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
