#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "pnt/errors.hpp"
#include "pnt/pnt_report.hpp"
#include "pnt/prime_count.hpp"

using pnt::ColumnId;
using pnt::PrimeEngine;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const std::vector<ColumnId> kAll(pnt::kAllColumns.begin(), pnt::kAllColumns.end());

}  // namespace

TEST_CASE("first column examples") {
  PrimeEngine engine;
  const std::vector<ColumnId> cols{ColumnId::x_over_ln};
  CHECK(pnt::format_ratio(pnt::build_row(engine, 1, cols).ratios.at(ColumnId::x_over_ln)) == "0.921");
  CHECK(pnt::format_ratio(pnt::build_row(engine, 3, cols).ratios.at(ColumnId::x_over_ln)) == "1.161");
  CHECK(pnt::format_ratio(pnt::build_row(engine, 25, cols).ratios.at(ColumnId::x_over_ln)) == "1.018");
}

TEST_CASE("first column matches the published values for every row") {
  PrimeEngine engine;
  const auto rows = pnt::build_table(engine, 1, 25, {ColumnId::x_over_ln});
  REQUIRE(rows.size() == 25);
  for (const auto& row : rows) {
    const auto published = pnt::published_ratio(row.exponent, ColumnId::x_over_ln);
    REQUIRE(published.has_value());
    CHECK(std::abs(row.ratios.at(ColumnId::x_over_ln) - *published) <= pnt::kDeviationTolerance);
  }
}

TEST_CASE("rows for k <= 9 use counted, not tabulated, pi") {
  PrimeEngine engine;
  for (unsigned k = 1; k <= 9; ++k) {
    const pnt::Natural x = pnt::Natural::pow10(k);
    CHECK(engine.resolve_method(x) != pnt::CountMethod::checkpoint);
    CHECK(pnt::build_row(engine, k, {}).pi_x == *pnt::checkpoint_pi(k));
  }
}

TEST_CASE("render csv") {
  PrimeEngine engine;
  const auto rows = pnt::build_table(engine, 1, 3, {ColumnId::x_over_ln});
  const std::string csv = pnt::render(rows, pnt::TableFormat::csv);
  CHECK(csv == "x,pi,x_over_ln\n1e1,4,0.921\n1e2,25,1.151\n1e3,168,1.161\n");
}

TEST_CASE("render with no columns emits only the header") {
  PrimeEngine engine;
  const auto rows = pnt::build_table(engine, 1, 4, {});
  CHECK(pnt::render(rows, pnt::TableFormat::csv) == "x,pi\n");
}

TEST_CASE("render is byte-stable") {
  PrimeEngine first_engine;
  PrimeEngine second_engine;
  const auto a = pnt::render(pnt::build_table(first_engine, 1, 25, kAll), pnt::TableFormat::csv);
  const auto b = pnt::render(pnt::build_table(second_engine, 1, 25, kAll), pnt::TableFormat::csv);
  CHECK(a == b);
  CHECK(a == read_file(std::string(PNT_GOLDEN_DIR) + "/table_all.csv"));
}

TEST_CASE("markdown golden table") {
  PrimeEngine engine;
  const auto md = pnt::render(pnt::build_table(engine, 1, 25, kAll), pnt::TableFormat::markdown);
  CHECK(md == read_file(std::string(PNT_GOLDEN_DIR) + "/table_all.md"));
  std::istringstream lines(md);
  std::string line;
  int data_rows = 0;
  while (std::getline(lines, line))
    if (line.rfind("| 10^", 0) == 0) {
      ++data_rows;
      CHECK(std::count(line.begin(), line.end(), '|') == 8);
    }
  CHECK(data_rows == 25);
}

TEST_CASE("format_ratio rounds half away from zero") {
  CHECK(pnt::format_ratio(0.92049) == "0.920");
  CHECK(pnt::format_ratio(1.0185) == "1.019");
  CHECK(pnt::format_ratio(1.0) == "1.000");
  CHECK(pnt::format_ratio(0.0005) == "0.001");
  CHECK(pnt::format_ratio(-0.0005) == "-0.001");
}

TEST_CASE("column and format parsing") {
  CHECK(pnt::parse_columns("all").size() == 5);
  CHECK(pnt::parse_columns("x_over_ln,x_over_ln_hcirc") ==
        std::vector<ColumnId>{ColumnId::x_over_ln, ColumnId::x_over_ln_hcirc});
  CHECK_THROWS_AS(pnt::parse_column("bogus"), pnt::DomainError);
  CHECK(pnt::parse_table_format("md") == pnt::TableFormat::markdown);
  CHECK_THROWS_AS(pnt::parse_table_format("xml"), pnt::DomainError);
}

TEST_CASE("table range errors") {
  PrimeEngine engine;
  CHECK_THROWS_AS(pnt::build_table(engine, 0, 3, kAll), pnt::RangeError);
  CHECK_THROWS_AS(pnt::build_table(engine, 1, 26, kAll), pnt::RangeError);
  CHECK_THROWS_AS(pnt::build_table(engine, 5, 4, kAll), pnt::RangeError);
}

TEST_CASE("deviations") {
  PrimeEngine engine;
  const auto devs = pnt::compute_deviations(engine, kAll);
  double max_first = 0;
  bool hcirc_row1 = false;
  for (const auto& d : devs) {
    if (d.column == ColumnId::x_over_ln) max_first = std::max(max_first, std::abs(d.delta));
    if (d.column == ColumnId::hcirc_over_ln_hcirc && d.exponent == 1) {
      hcirc_row1 = true;
      CHECK(d.published == doctest::Approx(1.101));
      CHECK(d.computed == doctest::Approx(1.158).epsilon(0.002));
      CHECK(std::abs(d.delta) > pnt::kDeviationTolerance);
    }
  }
  CHECK(max_first <= pnt::kDeviationTolerance);
  CHECK(hcirc_row1);

  const auto report = pnt::deviation_report(engine, kAll);
  CHECK(report.find("1,hcirc_over_ln_hcirc,") != std::string::npos);
  CHECK(report.find("offset") != std::string::npos);
  CHECK(report.find("# x_over_ln max_abs_delta=") != std::string::npos);
}

TEST_CASE("every column moves toward 1 between 10^3 and 10^12") {
  PrimeEngine engine;
  for (auto family : {pnt::LogFamily::primorial, pnt::LogFamily::prime}) {
    const auto r3 = pnt::build_row(engine, 3, kAll, family);
    const auto r12 = pnt::build_row(engine, 12, kAll, family);
    for (ColumnId c : kAll) {
      INFO(pnt::to_string(c));
      CHECK(std::abs(r12.ratios.at(c) - 1) < std::abs(r3.ratios.at(c) - 1));
    }
  }
}
