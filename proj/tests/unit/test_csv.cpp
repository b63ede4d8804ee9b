#include <doctest.h>

#include <cmath>
#include <random>

#include "kaonbell/csv.hpp"
#include "kaonbell/errors.hpp"
#include "kaonbell/scan.hpp"

using namespace kaonbell;

TEST_CASE("number formatting") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333");
  CHECK(format_number(123456789.0) == "1.23457e+08");
  CHECK(format_number(std::nan("")) == "");
}

TEST_CASE("CSV round trip is byte identical") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  ScanTable t{{"a", "b", "c"}, {}};
  for (int i = 0; i < 200; ++i) t.rows.push_back({u(rng), i % 7 == 0 ? std::nan("") : u(rng), 0.0});
  const auto text = to_csv(t);
  CHECK(to_csv(parse_csv(text)) == text);
  CHECK(text.substr(0, 6) == "a,b,c\n");

  ScanSpec s;
  s.steps = 50;
  const auto scan = asymmetry_discrepancy_scan(DecayParams::defaults(), s);
  const auto scan_text = to_csv(scan.table);
  CHECK(to_csv(parse_csv(scan_text)) == scan_text);
}

TEST_CASE("malformed CSV") {
  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), DomainError);
  CHECK_THROWS_AS(parse_csv("a,b\n1,x\n"), DomainError);
  const auto t = parse_csv("a,b\n1,\n");
  CHECK(std::isnan(t.rows[0][1]));
}
