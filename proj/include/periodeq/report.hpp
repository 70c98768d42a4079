#ifndef PERIODEQ_REPORT_HPP
#define PERIODEQ_REPORT_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "periodeq/monogeneity.hpp"
#include "periodeq/scanner.hpp"

namespace periodeq {

enum class OutputFormat { HumanTable, CSV, JSON };

/// "human", "csv" or "json"; throws InvalidArgument.
OutputFormat parse_output_format(std::string_view text);

inline constexpr std::string_view kCsvHeader =
    "e,f,p,g,n_real,delta_sign,delta_exponent,k_squared,k,monogenic,match_kind,coeffs";

/// Header line plus one row per record; coeffs are space-separated, high to
/// low, inside one quoted field.
std::string records_to_csv(std::span<const ClassificationRecord> records);
std::vector<ClassificationRecord> records_from_csv(std::string_view text);

/// Object with keys spec, records, missing_e, doublets, counterexamples.
/// Integers that can exceed 64 bits are decimal strings. The worker count is
/// left out so the document is the same for any degree of parallelism.
std::string report_to_json(const ScanReport& report);
ScanReport report_from_json(std::string_view text);

std::string record_to_json(const ClassificationRecord& record);

std::string record_to_human(const ClassificationRecord& record);
std::string report_to_human(const ScanReport& report);

/// Writes the report in the requested format (CSV holds the records only).
std::string render_report(const ScanReport& report, OutputFormat format);
std::string render_record(const ClassificationRecord& record, OutputFormat format);

}  // namespace periodeq

#endif  // PERIODEQ_REPORT_HPP
