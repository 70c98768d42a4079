#ifndef PERIODEQ_TABLE1_HPP
#define PERIODEQ_TABLE1_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace periodeq {

/// One published monogenic period equation: degree e, prime p, real-root
/// count, D = d_sign * p^d_exponent, and psi_e as printed.
struct Table1Row {
  std::uint64_t e = 0;
  std::uint64_t p = 0;
  std::size_t n_real = 0;
  int d_sign = 1;
  std::uint64_t d_exponent = 0;
  std::string psi;
};

/// The 24 reference rows for 4 <= e <= 33.
const std::vector<Table1Row>& table1_golden();

struct Table1Check {
  Table1Row row;
  bool pass = false;
  std::string detail;  // empty on pass
};

/// Regenerates each row from (e, f = (p-1)/e) and compares coefficients,
/// n_real, and D exactly.
std::vector<Table1Check> check_table1(std::span<const Table1Row> rows);

/// Whitespace-separated lines "e p n_real d_sign d_exponent psi"; '#' starts
/// a comment. Throws MathError(InvalidArgument) on malformed lines.
std::vector<Table1Row> parse_table1(std::string_view text);
std::string format_table1(std::span<const Table1Row> rows);

}  // namespace periodeq

#endif  // PERIODEQ_TABLE1_HPP
