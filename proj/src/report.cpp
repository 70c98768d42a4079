#include "periodeq/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "periodeq/error.hpp"

namespace periodeq {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_input(const std::string& why) {
  throw MathError(ErrorKind::InvalidArgument, why);
}

std::string join_coeffs(const IntPoly& psi) {
  std::string out;
  for (const auto& c : psi.coeffs_descending()) {
    if (!out.empty()) out += ' ';
    out += c.get_str();
  }
  return out;
}

IntPoly split_coeffs(std::string_view text) {
  std::vector<mpz_class> desc;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    mpz_class c;
    if (c.set_str(tok, 10) != 0) bad_input("bad coefficient '" + tok + "'");
    desc.push_back(std::move(c));
  }
  return IntPoly::from_descending(desc);
}

mpz_class to_mpz(const std::string& text) {
  mpz_class v;
  if (v.set_str(text, 10) != 0) bad_input("bad integer '" + text + "'");
  return v;
}

std::uint64_t to_u64(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    bad_input("bad integer '" + text + "'");
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    bad_input("bad integer '" + text + "'");
  }
  return v;
}

// Rebuilds the derived fields (D, signature pairs) from the stored ones.
ClassificationRecord make_record(std::uint64_t e, std::uint64_t f, std::uint64_t p,
                                 std::uint64_t g, std::size_t n_real, int delta_sign,
                                 std::uint64_t delta_exponent, mpz_class k_squared,
                                 mpz_class k, bool monogenic, MatchKind match,
                                 IntPoly psi) {
  if (delta_sign != 1 && delta_sign != -1) bad_input("delta_sign must be 1 or -1");
  if (n_real > e || (e - n_real) % 2 != 0) bad_input("n_real inconsistent with e");
  ClassificationRecord r;
  r.e = e;
  r.f = f;
  r.p = p;
  r.g = g;
  r.field_discriminant = {delta_sign, p, delta_exponent};
  r.k_squared = std::move(k_squared);
  r.k = std::move(k);
  r.poly_discriminant = r.k_squared * r.field_discriminant.value();
  r.monogenic = monogenic;
  r.signature = {n_real, (e - n_real) / 2};
  r.match_kind = match;
  r.psi = std::move(psi);
  return r;
}

Json record_json(const ClassificationRecord& r) {
  Json coeffs = Json::array();
  for (const auto& c : r.psi.coeffs_descending()) coeffs.push_back(c.get_str());
  Json j;
  j["e"] = r.e;
  j["f"] = r.f;
  j["p"] = r.p;
  j["g"] = r.g;
  j["n_real"] = r.signature.n_real;
  j["n_complex_pairs"] = r.signature.n_complex_pairs;
  j["delta_sign"] = r.field_discriminant.sign;
  j["delta_exponent"] = r.field_discriminant.exponent;
  j["poly_discriminant"] = r.poly_discriminant.get_str();
  j["k_squared"] = r.k_squared.get_str();
  j["k"] = r.k.get_str();
  j["monogenic"] = r.monogenic;
  j["match_kind"] = std::string(to_string(r.match_kind));
  j["coeffs"] = std::move(coeffs);
  return j;
}

ClassificationRecord record_from_json(const Json& j) {
  std::vector<mpz_class> desc;
  for (const auto& c : j.at("coeffs")) desc.push_back(to_mpz(c.get<std::string>()));
  ClassificationRecord r = make_record(
      j.at("e").get<std::uint64_t>(), j.at("f").get<std::uint64_t>(),
      j.at("p").get<std::uint64_t>(), j.at("g").get<std::uint64_t>(),
      j.at("n_real").get<std::size_t>(), j.at("delta_sign").get<int>(),
      j.at("delta_exponent").get<std::uint64_t>(),
      to_mpz(j.at("k_squared").get<std::string>()), to_mpz(j.at("k").get<std::string>()),
      j.at("monogenic").get<bool>(),
      parse_match_kind(j.at("match_kind").get<std::string>()),
      IntPoly::from_descending(desc));
  if (r.poly_discriminant != to_mpz(j.at("poly_discriminant").get<std::string>())) {
    bad_input("poly_discriminant disagrees with k_squared * delta");
  }
  return r;
}

std::string abbreviate(const mpz_class& v) {
  std::string s = v.get_str();
  if (s.size() <= 24) return s;
  const std::size_t digits = s.size() - (s[0] == '-' ? 1 : 0);
  return s.substr(0, 10) + "..." + s.substr(s.size() - 6) + " (" +
         std::to_string(digits) + " digits)";
}

std::string delta_string(const FieldDiscriminant& d) {
  return (d.sign < 0 ? "-" : "+") + std::to_string(d.p) + "^" + std::to_string(d.exponent);
}

std::string join_u64(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::uint64_t x : v) {
    if (!out.empty()) out += ", ";
    out += std::to_string(x);
  }
  return out.empty() ? "(none)" : out;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "human") return OutputFormat::HumanTable;
  if (text == "csv") return OutputFormat::CSV;
  if (text == "json") return OutputFormat::JSON;
  bad_input("unknown format '" + std::string(text) + "'");
}

std::string records_to_csv(std::span<const ClassificationRecord> records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += std::to_string(r.e) + ',' + std::to_string(r.f) + ',' + std::to_string(r.p) +
           ',' + std::to_string(r.g) + ',' + std::to_string(r.signature.n_real) + ',' +
           std::to_string(r.field_discriminant.sign) + ',' +
           std::to_string(r.field_discriminant.exponent) + ',' + r.k_squared.get_str() +
           ',' + r.k.get_str() + ',' + (r.monogenic ? "true" : "false") + ',' +
           std::string(to_string(r.match_kind)) + ",\"" + join_coeffs(r.psi) + "\"\n";
  }
  return out;
}

std::vector<ClassificationRecord> records_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) bad_input("missing CSV header");
  std::vector<ClassificationRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      if (pos < line.size() && line[pos] == '"') {
        const std::size_t close = line.find('"', pos + 1);
        if (close == std::string::npos) bad_input("unterminated quote");
        fields.push_back(line.substr(pos + 1, close - pos - 1));
        pos = close + 2;
        continue;
      }
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) comma = line.size();
      fields.push_back(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    if (fields.size() != 12) bad_input("expected 12 CSV fields, got " + std::to_string(fields.size()));
    if (fields[9] != "true" && fields[9] != "false") bad_input("bad monogenic flag");
    const int sign = fields[5] == "-1" ? -1 : (fields[5] == "1" ? 1 : 0);
    out.push_back(make_record(to_u64(fields[0]), to_u64(fields[1]), to_u64(fields[2]),
                              to_u64(fields[3]), to_u64(fields[4]), sign,
                              to_u64(fields[6]), to_mpz(fields[7]), to_mpz(fields[8]),
                              fields[9] == "true", parse_match_kind(fields[10]),
                              split_coeffs(fields[11])));
  }
  return out;
}

std::string report_to_json(const ScanReport& report) {
  Json spec;
  spec["e_min"] = report.spec.e_min;
  spec["e_max"] = report.spec.e_max;
  spec["p_bound"] = report.spec.p_bound;
  spec["mode"] = std::string(to_string(report.spec.mode));
  spec["conjecture_conditional"] = report.spec.mode == ScanMode::FastDoublet;
  Json records = Json::array();
  for (const auto& r : report.records) records.push_back(record_json(r));
  Json counter = Json::array();
  for (const auto& r : report.counterexamples) counter.push_back(record_json(r));
  Json doc;
  doc["spec"] = std::move(spec);
  doc["records"] = std::move(records);
  doc["missing_e"] = report.missing_e;
  doc["doublets"] = report.doublets;
  doc["counterexamples"] = std::move(counter);
  return doc.dump(2) + "\n";
}

ScanReport report_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
    ScanReport report;
    const auto& spec = doc.at("spec");
    report.spec.e_min = spec.at("e_min").get<std::uint64_t>();
    report.spec.e_max = spec.at("e_max").get<std::uint64_t>();
    report.spec.p_bound = spec.at("p_bound").get<std::uint64_t>();
    const auto mode = spec.at("mode").get<std::string>();
    if (mode != "full" && mode != "fast") bad_input("unknown mode '" + mode + "'");
    report.spec.mode = mode == "full" ? ScanMode::Full : ScanMode::FastDoublet;
    for (const auto& r : doc.at("records")) report.records.push_back(record_from_json(r));
    for (const auto& r : doc.at("counterexamples")) {
      report.counterexamples.push_back(record_from_json(r));
    }
    report.missing_e = doc.at("missing_e").get<std::vector<std::uint64_t>>();
    report.doublets = doc.at("doublets").get<std::vector<std::uint64_t>>();
    if (report.spec.mode == ScanMode::Full) {
      for (std::uint64_t e = report.spec.e_min; e <= report.spec.e_max; ++e) {
        report.monogenic_map[e];
      }
      for (const auto& r : report.records) {
        if (r.monogenic) report.monogenic_map[r.e].push_back(r.f);
      }
    }
    return report;
  } catch (const nlohmann::json::exception& err) {
    bad_input(std::string("malformed report JSON: ") + err.what());
  }
}

std::string record_to_json(const ClassificationRecord& record) {
  return record_json(record).dump(2) + "\n";
}

std::string record_to_human(const ClassificationRecord& r) {
  std::ostringstream out;
  out << "e=" << r.e << " f=" << r.f << " p=" << r.p << " g=" << r.g << '\n'
      << "psi        " << r.psi.to_string() << '\n'
      << "D          " << r.poly_discriminant.get_str() << '\n'
      << "delta      " << delta_string(r.field_discriminant) << '\n'
      << "k^2        " << r.k_squared.get_str() << '\n'
      << "k          " << r.k.get_str() << '\n'
      << "signature  (" << r.signature.n_real << ", " << r.signature.n_complex_pairs << ")\n"
      << "monogenic  " << (r.monogenic ? "yes" : "no") << '\n'
      << "match      " << to_string(r.match_kind) << '\n';
  return out.str();
}

std::string report_to_human(const ScanReport& report) {
  std::ostringstream out;
  const auto& s = report.spec;
  out << "scan e=" << s.e_min << ":" << s.e_max << " p_bound=" << s.p_bound
      << " mode=" << to_string(s.mode) << '\n';
  if (s.mode == ScanMode::FastDoublet) {
    out << "doublets (conjecture-conditional): " << join_u64(report.doublets) << '\n';
    return out.str();
  }
  out << std::left << std::setw(6) << "e" << std::setw(8) << "f" << std::setw(10) << "p"
      << std::setw(6) << "n_R" << std::setw(12) << "delta" << std::setw(42) << "k^2"
      << std::setw(6) << "mono" << "match\n";
  std::size_t monogenic = 0;
  for (const auto& r : report.records) {
    if (r.monogenic) ++monogenic;
    out << std::setw(6) << r.e << std::setw(8) << r.f << std::setw(10) << r.p
        << std::setw(6) << r.signature.n_real << std::setw(12)
        << delta_string(r.field_discriminant) << std::setw(42) << abbreviate(r.k_squared)
        << std::setw(6) << (r.monogenic ? "yes" : "no") << to_string(r.match_kind) << '\n';
  }
  out << "records: " << report.records.size() << ", monogenic: " << monogenic << '\n'
      << "doublets: " << join_u64(report.doublets) << '\n'
      << "missing e (p <= " << s.p_bound << "): " << join_u64(report.missing_e) << '\n'
      << "counterexamples: " << report.counterexamples.size() << '\n';
  return out.str();
}

std::string render_report(const ScanReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::CSV: return records_to_csv(report.records);
    case OutputFormat::JSON: return report_to_json(report);
    case OutputFormat::HumanTable: break;
  }
  return report_to_human(report);
}

std::string render_record(const ClassificationRecord& record, OutputFormat format) {
  switch (format) {
    case OutputFormat::CSV: return records_to_csv(std::span(&record, 1));
    case OutputFormat::JSON: return record_to_json(record);
    case OutputFormat::HumanTable: break;
  }
  return record_to_human(record);
}

}  // namespace periodeq
