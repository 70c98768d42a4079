#include "periodeq/table1.hpp"

#include <sstream>

#include "periodeq/error.hpp"
#include "periodeq/intpoly.hpp"
#include "periodeq/monogeneity.hpp"
#include "periodeq/number_theory.hpp"

namespace periodeq {

const std::vector<Table1Row>& table1_golden() {
  static const std::vector<Table1Row> kRows = {
      {4, 5, 0, 1, 3,
       "x^4+x^3+x^2+x+1"},
      {5, 11, 5, 1, 4,
       "x^5+x^4-4x^3-3x^2+3x+1"},
      {6, 7, 0, -1, 5,
       "x^6+x^5+x^4+x^3+x^2+x+1"},
      {6, 13, 6, 1, 5,
       "x^6+x^5-5x^4-4x^3+6x^2+3x-1"},
      {8, 17, 8, 1, 7,
       "x^8+x^7-7x^6-6x^5+15x^4+10x^3-10x^2-4x+1"},
      {9, 19, 9, 1, 8,
       "x^9+x^8-8x^7-7x^6+21x^5+15x^4-20x^3-10x^2+5x+1"},
      {10, 11, 0, -1, 9,
       "x^10+x^9+x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+1"},
      {11, 23, 11, 1, 10,
       "x^11+x^10-10x^9-9x^8+36x^7+28x^6-56x^5-35x^4+35x^3+15x^2-6x-"
       "1"},
      {12, 13, 0, 1, 11,
       "x^12+x^11+x^10+x^9+x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+1"},
      {14, 29, 14, 1, 13,
       "x^14+x^13-13x^12-12x^11+66x^10+55x^9-165x^8-120x^7+210x^6+12"
       "6x^5-126x^4-56x^3+28x^2+7x-1"},
      {15, 31, 15, 1, 14,
       "x^15+x^14-14x^13-13x^12+78x^11+66x^10-220x^9-165x^8+330x^7+2"
       "10x^6-252x^5-126x^4+84x^3+28x^2-8x-1"},
      {16, 17, 0, 1, 15,
       "x^16+x^15+x^14+x^13+x^12+x^11+x^10+x^9+x^8+x^7+x^6+x^5+x^4+x"
       "^3+x^2+x+1"},
      {18, 19, 0, -1, 17,
       "x^18+x^17+x^16+x^15+x^14+x^13+x^12+x^11+x^10+x^9+x^8+x^7+x^6"
       "+x^5+x^4+x^3+x^2+x+1"},
      {18, 37, 18, 1, 17,
       "x^18+x^17-17x^16-16x^15+120x^14+105x^13-455x^12-364x^11+1001"
       "x^10+715x^9-1287x^8-792x^7+924x^6+462x^5-330x^4-120x^3+45x^2"
       "+9x-1"},
      {20, 41, 20, 1, 19,
       "x^20+x^19-19x^18-18x^17+153x^16+136x^15-680x^14-560x^13+1820"
       "x^12+1365x^11-3003x^10-2002x^9+3003x^8+1716x^7-1716x^6-792x^"
       "5+495x^4+165x^3-55x^2-10x+1"},
      {21, 43, 21, 1, 20,
       "x^21+x^20-20x^19-19x^18+171x^17+153x^16-816x^15-680x^14+2380"
       "x^13+1820x^12-4368x^11-3003x^10+5005x^9+3003x^8-3432x^7-1716"
       "x^6+1287x^5+495x^4-220x^3-55x^2+11x+1"},
      {22, 23, 0, -1, 21,
       "x^22+x^21+x^20+x^19+x^18+x^17+x^16+x^15+x^14+x^13+x^12+x^11+"
       "x^10+x^9+x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+1"},
      {23, 47, 23, 1, 22,
       "x^23+x^22-22x^21-21x^20+210x^19+190x^18-1140x^17-969x^16+387"
       "6x^15+3060x^14-8568x^13-6188x^12+12376x^11+8008x^10-11440x^9"
       "-6435x^8+6435x^7+3003x^6-2002x^5-715x^4+286x^3+66x^2-12x-1"},
      {26, 53, 26, 1, 25,
       "x^26+x^25-25x^24-24x^23+276x^22+253x^21-1771x^20-1540x^19+73"
       "15x^18+5985x^17-20349x^16-15504x^15+38760x^14+27132x^13-5038"
       "8x^12-31824x^11+43758x^10+24310x^9-24310x^8-11440x^7+8008x^6"
       "+3003x^5-1365x^4-364x^3+91x^2+13x-1"},
      {28, 29, 0, 1, 27,
       "x^28+x^27+x^26+x^25+x^24+x^23+x^22+x^21+x^20+x^19+x^18+x^17+"
       "x^16+x^15+x^14+x^13+x^12+x^11+x^10+x^9+x^8+x^7+x^6+x^5+x^4+x"
       "^3+x^2+x+1"},
      {29, 59, 29, 1, 28,
       "x^29+x^28-28x^27-27x^26+351x^25+325x^24-2600x^23-2300x^22+12"
       "650x^21+10626x^20-42504x^19-33649x^18+100947x^17+74613x^16-1"
       "70544x^15-116280x^14+203490x^13+125970x^12-167960x^11-92378x"
       "^10+92378x^9+43758x^8-31824x^7-12376x^6+6188x^5+1820x^4-560x"
       "^3-105x^2+15x+1"},
      {30, 31, 0, -1, 29,
       "x^30+x^29+x^28+x^27+x^26+x^25+x^24+x^23+x^22+x^21+x^20+x^19+"
       "x^18+x^17+x^16+x^15+x^14+x^13+x^12+x^11+x^10+x^9+x^8+x^7+x^6"
       "+x^5+x^4+x^3+x^2+x+1"},
      {30, 61, 30, 1, 29,
       "x^30+x^29-29x^28-28x^27+378x^26+351x^25-2925x^24-2600x^23+14"
       "950x^22+12650x^21-53130x^20-42504x^19+134596x^18+100947x^17-"
       "245157x^16-170544x^15+319770x^14+203490x^13-293930x^12-16796"
       "0x^11+184756x^10+92378x^9-75582x^8-31824x^7+18564x^6+6188x^5"
       "-2380x^4-560x^3+120x^2+15x-1"},
      {33, 67, 33, 1, 32,
       "x^33+x^32-32x^31-31x^30+465x^29+435x^28-4060x^27-3654x^26+23"
       "751x^25+20475x^24-98280x^23-80730x^22+296010x^21+230230x^20-"
       "657800x^19-480700x^18+1081575x^17+735471x^16-1307504x^15-817"
       "190x^14+1144066x^13+646646x^12-705432x^11-352716x^10+293930x"
       "^9+125970x^8-77520x^7-27132x^6+11628x^5+3060x^4-816x^3-136x^"
       "2+17x+1"},
  };
  return kRows;
}

std::vector<Table1Check> check_table1(std::span<const Table1Row> rows) {
  std::vector<Table1Check> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Table1Check check{row, false, {}};
    try {
      if (row.e == 0 || (row.p - 1) % row.e != 0) {
        throw MathError(ErrorKind::InvalidContext, "e does not divide p-1");
      }
      const ClassificationRecord rec = classify(make_context(row.e, (row.p - 1) / row.e));
      const IntPoly expected = IntPoly::parse(row.psi);
      const FieldDiscriminant printed_d{row.d_sign, row.p, row.d_exponent};
      if (rec.psi != expected) {
        check.detail = "psi: computed " + rec.psi.to_string();
      } else if (rec.signature.n_real != row.n_real) {
        check.detail = "n_real: computed " + std::to_string(rec.signature.n_real);
      } else if (rec.poly_discriminant != printed_d.value()) {
        check.detail = "D: computed " + rec.poly_discriminant.get_str();
      } else {
        check.pass = true;
      }
    } catch (const MathError& err) {
      check.detail = std::string(to_string(err.kind())) + ": " + err.what();
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<Table1Row> parse_table1(std::string_view text) {
  std::vector<Table1Row> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    Table1Row row;
    if (!(fields >> row.e)) continue;
    if (!(fields >> row.p >> row.n_real >> row.d_sign >> row.d_exponent >> row.psi) ||
        (row.d_sign != 1 && row.d_sign != -1)) {
      throw MathError(ErrorKind::InvalidArgument,
                      "malformed table row at line " + std::to_string(line_no));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_table1(std::span<const Table1Row> rows) {
  std::ostringstream out;
  out << "# e p n_real d_sign d_exponent psi\n";
  for (const auto& r : rows) {
    out << r.e << ' ' << r.p << ' ' << r.n_real << ' ' << r.d_sign << ' '
        << r.d_exponent << ' ' << r.psi << '\n';
  }
  return out.str();
}

}  // namespace periodeq
