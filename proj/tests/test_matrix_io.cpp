#include <clocale>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "symdet/matrix_io.hpp"
#include "symdet/rng.hpp"

using namespace symdet;

TEST_CASE("parse real matrix") {
  const AnyMatrix m = parse_matrix("2 R\n1 -2.5\n3e2 +4\n");
  REQUIRE(std::holds_alternative<RealMatrix>(m));
  CHECK(std::get<RealMatrix>(m) == (RealMatrix{{1.0, -2.5}, {300.0, 4.0}}));
}

TEST_CASE("parse complex matrix") {
  const AnyMatrix m = parse_matrix("2 C\n1,0 0,1\n  -1,0.5\t2,-3  \n\n");
  REQUIRE(std::holds_alternative<ComplexMatrix>(m));
  const ComplexMatrix& c = std::get<ComplexMatrix>(m);
  CHECK(c(0, 1) == Complex{0.0, 1.0});
  CHECK(c(1, 0) == Complex{-1.0, 0.5});
  CHECK(c(1, 1) == Complex{2.0, -3.0});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n1 2\n3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 Q\n1 2\n3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("0 R\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 R\n1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 R\n1 2 9\n3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 R\n1 2\n3 4\n5 6\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 R\n1 x\n3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 C\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 R\n1,5\n"), ParseError);
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/matrix.txt"), ParseError);
}

TEST_CASE("format/parse round trip is exact") {
  Rng rng(31);
  const ComplexMatrix c = random_gaussian<Complex>(rng, 5);
  const std::string text = format_matrix(c);
  CHECK(std::get<ComplexMatrix>(parse_matrix(text)) == c);
  CHECK(format_matrix(std::get<ComplexMatrix>(parse_matrix(text))) == text);

  const RealMatrix r = random_gaussian<double>(rng, 4);
  CHECK(std::get<RealMatrix>(parse_matrix(format_matrix(r))) == r);
}

TEST_CASE("output ignores the C locale's decimal separator") {
  // Only meaningful where a comma-decimal locale is installed.
  if (std::setlocale(LC_ALL, "de_DE.UTF-8") != nullptr) {
    const std::string text = format_matrix(RealMatrix{{0.5}});
    CHECK(text == "1 R\n0.5\n");
    std::setlocale(LC_ALL, "C");
  }
  CHECK(format_matrix(RealMatrix{{0.5}}) == "1 R\n0.5\n");
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "symdet_io_test.txt";
  const ComplexMatrix c{{Complex{1.0, 2.0}, Complex{0.0, 0.0}}, {Complex{-3.0, 0.25}, Complex{1e-300, 5.0}}};
  write_matrix_file(path.string(), c);
  CHECK(std::get<ComplexMatrix>(read_matrix_file(path.string())) == c);
  std::filesystem::remove(path);
}
