#include <algorithm>
#include <random>
#include <string>

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "rankforge/matrix.hpp"

using namespace rankforge;

TEST_CASE("parse single cell") {
  PartialMatrix m = parse_matrix("1\n");
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  REQUIRE(m.at(0, 0) == Cell::One);
  REQUIRE(m.total());
}

TEST_CASE("parse 5x6 gap matrix") {
  PartialMatrix m = fixtures::gap45();
  REQUIRE(m.rows() == 5);
  REQUIRE(m.cols() == 6);
  REQUIRE(m.total());
  // Hand tally: count '1' characters in the literal, independent of parse.
  std::string lit = fixtures::kGap45;
  auto ones = std::count(lit.begin(), lit.end(), '1');
  REQUIRE(ones == 18);
  REQUIRE(m.one_count() == 18);
}

TEST_CASE("12x12 gap matrix has 54 ones") {
  PartialMatrix m = fixtures::gap912();
  REQUIRE(m.rows() == 12);
  REQUIRE(m.cols() == 12);
  std::string lit = fixtures::kGap912;
  REQUIRE(std::count(lit.begin(), lit.end(), '1') == 54);
  REQUIRE(m.one_count() == 54);
  std::string text = format_matrix(m);
  REQUIRE(std::count(text.begin(), text.end(), '\n') == 12);
}

TEST_CASE("parse partial matrix") {
  PartialMatrix m = parse_matrix("01*\n*10\n");
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 3);
  REQUIRE_FALSE(m.total());
  REQUIRE(m.count(Cell::Star) == 2);
  REQUIRE(m.at(0, 2) == Cell::Star);
  REQUIRE(m.at(1, 0) == Cell::Star);
}

TEST_CASE("parse accepts comments and missing trailing newline") {
  PartialMatrix m = parse_matrix("# header\n10\n# mid\n01");
  REQUIRE(m == PartialMatrix::identity(2));
}

TEST_CASE("parse errors name the line") {
  try {
    parse_matrix("101\n10\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line == 2);
  }
  REQUIRE_THROWS_AS(parse_matrix("10\n1x\n"), ParseError);
  REQUIRE_THROWS_AS(parse_matrix(""), ParseError);
  REQUIRE_THROWS_AS(parse_matrix("# only a comment\n"), ParseError);
}

TEST_CASE("format round trips") {
  REQUIRE(format_matrix(parse_matrix("1\n")) == "1\n");
  REQUIRE(format_matrix(parse_matrix("01*\n*10\n")) == "01*\n*10\n");
}

TEST_CASE("parse/format round trip on random matrices") {
  std::mt19937_64 rng(20240517);
  for (int i = 0; i < 200; ++i) {
    PartialMatrix m = fixtures::random_matrix(rng, 16, 0.4, 0.15);
    REQUIRE(parse_matrix(format_matrix(m)) == m);
  }
}

TEST_CASE("tensor products") {
  PartialMatrix i2 = PartialMatrix::identity(2);
  REQUIRE(tensor(i2, i2) == PartialMatrix::identity(4));
  REQUIRE(tensor(PartialMatrix::ones(2, 2), PartialMatrix::ones(3, 3)) ==
          PartialMatrix::ones(6, 6));

  PartialMatrix m = fixtures::gap45();
  PartialMatrix mm = tensor(m, m);
  REQUIRE(mm.rows() == 25);
  REQUIRE(mm.cols() == 36);
  REQUIRE(mm.one_count() == 18 * 18);

  PartialMatrix partial = parse_matrix("1*\n01\n");
  REQUIRE_THROWS_AS(tensor(partial, i2), UnsupportedError);
  REQUIRE(tensor_power(m, 1) == m);
}

TEST_CASE("dedup collapses duplicates") {
  PartialMatrix ones3 = PartialMatrix::ones(3, 3);
  DedupResult r = dedup(ones3);
  REQUIRE(r.matrix == PartialMatrix::ones(1, 1));
  REQUIRE(r.row_map == std::vector<std::size_t>{0, 0, 0});

  PartialMatrix m = fixtures::gap45();
  REQUIRE(dedup(m).matrix == m);

  PartialMatrix stacked(10, 6);
  for (std::size_t r2 = 0; r2 < 10; ++r2)
    for (std::size_t c = 0; c < 6; ++c) stacked.set(r2, c, m.at(r2 % 5, c));
  REQUIRE(dedup(stacked).matrix == m);
}

TEST_CASE("dedup re-expansion reproduces the matrix") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    PartialMatrix m = fixtures::random_matrix(rng, 8, 0.45, 0.1);
    DedupResult d = dedup(m);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        REQUIRE(m.at(r, c) == d.matrix.at(d.row_map[r], d.col_map[c]));
  }
}

TEST_CASE("cell set rectangles") {
  CellSet s(3, 4);
  REQUIRE(s.is_rectangle());
  s.insert(0, 1);
  s.insert(0, 3);
  s.insert(2, 1);
  REQUIRE_FALSE(s.is_rectangle());
  s.insert(2, 3);
  REQUIRE(s.is_rectangle());
  REQUIRE(s.size() == 4);
  REQUIRE(s.row_support().count() == 2);
  REQUIRE_THROWS_AS(s.insert(3, 0), PreconditionError);
}

TEST_CASE("rational parsing") {
  REQUIRE(parse_rational("3/6") == Rational(1, 2));
  REQUIRE(parse_rational("-2/4") == Rational(-1, 2));
  REQUIRE(parse_rational("7") == 7);
  REQUIRE(rational_str(Rational(1, 2)) == "1/2");
  REQUIRE(rational_str(Rational(-4, 2)) == "-2");
  REQUIRE_THROWS_AS(parse_rational("1/0"), ParseError);
  REQUIRE_THROWS_AS(parse_rational("a"), ParseError);
  REQUIRE_THROWS_AS(parse_rational(""), ParseError);
  REQUIRE_THROWS_AS(parse_rational("1.5"), ParseError);
}
