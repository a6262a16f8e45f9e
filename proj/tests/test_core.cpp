#include <doctest.h>

#include <random>
#include <sstream>

#include "latsq/core.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace latsq;
using namespace latsq::testing;

TEST_CASE("permutation factories and accessors") {
  const auto id = Permutation::identity(4);
  CHECK(id.images() == std::vector<int>{1, 2, 3, 4});
  CHECK(id.of(3) == 3);

  const auto sigma = Permutation::from_images({4, 2, 1, 5, 3});
  CHECK(sigma.order() == 5);
  CHECK(sigma.of(1) == 4);
  CHECK(sigma.of(5) == 3);

  CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({1, 3}), std::invalid_argument);
}

TEST_CASE("permutation text round trip") {
  const auto sigma = Permutation::parse("4,2,1,5,3");
  CHECK(sigma.images() == kSigmaImages);
  CHECK(sigma.to_string() == "4,2,1,5,3");
  CHECK(Permutation::parse(" 4 , 2 , 1 , 5 , 3 ") == sigma);

  CHECK_THROWS_AS(Permutation::parse(""), ParseError);
  CHECK_THROWS_AS(Permutation::parse("1,2,x"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("1,1,2"), ParseError);
}

TEST_CASE("permutation inverse and composition") {
  const auto sigma = Permutation::from_images(kSigmaImages);
  const auto inv = sigma.inverse();
  for (int x = 1; x <= 5; ++x) {
    CHECK(inv.of(sigma.of(x)) == x);
    CHECK(sigma.of(inv.of(x)) == x);
  }
  CHECK(compose(sigma, inv) == Permutation::identity(5));
  CHECK(compose(inv, sigma) == Permutation::identity(5));

  const auto tau = Permutation::from_images(kTauImages);
  // compose(f, g) applies g first.
  CHECK(compose(sigma, tau).of(1) == sigma.of(tau.of(1)));
  CHECK_THROWS_AS(compose(sigma, Permutation::identity(4)), std::invalid_argument);

  CHECK(Permutation::from_images({1, 3, 2}) < Permutation::from_images({2, 1, 3}));
}

TEST_CASE("validate locates the first violation in row-major order") {
  Grid ok(2);
  ok.at(1, 1) = 1;
  ok.at(1, 2) = 2;
  ok.at(2, 1) = 2;
  ok.at(2, 2) = 1;
  CHECK(validate(ok).ok());
  CHECK(validate(ok).message() == "valid");

  Grid row_dup(2);
  row_dup.at(1, 1) = 1;
  row_dup.at(1, 2) = 1;
  row_dup.at(2, 1) = 2;
  row_dup.at(2, 2) = 2;
  const auto rv = validate(row_dup);
  CHECK(rv.kind == Validity::Kind::row_duplicate);
  CHECK(rv.cell == Cell{1, 2});
  CHECK(rv.symbol == 1);

  Grid col_dup(2);
  col_dup.at(1, 1) = 1;
  col_dup.at(1, 2) = 2;
  col_dup.at(2, 1) = 1;
  col_dup.at(2, 2) = 2;
  const auto cv = validate(col_dup);
  CHECK(cv.kind == Validity::Kind::column_duplicate);
  CHECK(cv.cell == Cell{2, 1});
  CHECK(cv.symbol == 1);

  Grid range(2);
  range.at(1, 1) = 1;
  range.at(1, 2) = 3;
  range.at(2, 1) = 2;
  range.at(2, 2) = 1;
  const auto sv = validate(range);
  CHECK(sv.kind == Validity::Kind::symbol_out_of_range);
  CHECK(sv.cell == Cell{1, 2});
  CHECK(sv.symbol == 3);
}

TEST_CASE("the misprinted loop table fails validation at its duplicate") {
  const Grid grid = load_grid("q5_loop1_printed.txt");
  const auto v = validate(grid);
  CHECK_FALSE(v.ok());
  CHECK(v.kind == Validity::Kind::row_duplicate);
  CHECK(v.cell == Cell{6, 5});
  CHECK(v.symbol == 5);
  CHECK(v.message() == "row 6 repeats symbol 5 at column 5");
}

TEST_CASE("every golden square fixture parses and validates") {
  for (const auto& name : kSquareFixtures) {
    CAPTURE(name);
    const LatinSquare square = load_square(name);
    CHECK(validate(square.grid()).ok());
  }
}

TEST_CASE("parsing the shared order-5 square") {
  const LatinSquare q5 = load_square("q5.txt");
  CHECK(q5.order() == 5);
  CHECK(q5.at(1, 1) == 1);
  CHECK(q5.at(2, 3) == 1);
  CHECK(q5.at(5, 5) == 4);
  CHECK(q5.rows()[1] == std::vector<int>{4, 3, 1, 5, 2});
}

TEST_CASE("smallest square and assorted parse errors") {
  CHECK(parse_square("1\n1\n").order() == 1);
  CHECK(parse_square("# leading comment\n\n2\n1 2\n2 1\n# trailing\n").order() == 2);

  CHECK_THROWS_WITH_AS(parse_square(""), "missing order line", ParseError);
  CHECK_THROWS_AS(parse_square("0\n"), ParseError);
  CHECK_THROWS_AS(parse_square("x\n"), ParseError);
  CHECK_THROWS_AS(parse_square("2\n1 2\n"), ParseError);         // missing row
  CHECK_THROWS_AS(parse_square("2\n1 2 1\n2 1\n"), ParseError);  // long row
  CHECK_THROWS_AS(parse_square("2\n1\n2 1\n"), ParseError);      // short row
  CHECK_THROWS_AS(parse_square("2\n1 2\n2 z\n"), ParseError);    // bad token
  CHECK_THROWS_AS(parse_square("2\n1 3\n3 1\n"), ParseError);    // out of range
  CHECK_THROWS_AS(parse_square("2\n1 2\n2 1\n9\n"), ParseError);  // trailing
  CHECK_THROWS_AS(parse_square("2\n1 1\n2 2\n"), ParseError);    // not Latin
  CHECK_THROWS_AS(parse_square("zero-based\nzero-based\n2\n0 1\n1 0\n"), ParseError);
}

TEST_CASE("zero-based files normalize to 1-based symbols") {
  CHECK(parse_square("zero-based\n2\n0 1\n1 0\n") == cyclic_table(2));
  // 0-based rows out of range once the directive is present.
  CHECK_THROWS_AS(parse_square("zero-based\n2\n1 2\n2 1\n"), ParseError);

  const LatinSquare bel = load_square("z3_bel.txt");
  CHECK(bel == LatinSquare::from_rows(
                   {{4, 2, 3, 1}, {2, 4, 1, 3}, {3, 1, 2, 4}, {1, 3, 4, 2}}));
}

TEST_CASE("serialization format and round trip") {
  CHECK(to_text(cyclic_table(2)) == "2\n1 2\n2 1\n");
  for (const auto& name : kSquareFixtures) {
    CAPTURE(name);
    const LatinSquare square = load_square(name);
    CHECK(parse_square(to_text(square)) == square);
  }
}

TEST_CASE("group tables") {
  CHECK(cyclic_table(3) ==
        LatinSquare::from_rows({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}));
  CHECK(cyclic_table(1).order() == 1);
  CHECK(validate(cyclic_table(6).grid()).ok());
  CHECK_THROWS_AS(cyclic_table(0), std::invalid_argument);

  const LatinSquare k = klein_table();
  for (int x = 1; x <= 4; ++x) CHECK(k.at(x, x) == 1);
  CHECK(has_identity(k));
  CHECK(has_identity(cyclic_table(6)));
}

TEST_CASE("identity isotopy fixes every square") {
  for (const auto& name : kSquareFixtures) {
    const LatinSquare square = load_square(name);
    const auto id = Permutation::identity(square.order());
    CHECK(apply_isotopy(square, id, id, id) == square);
  }
}

TEST_CASE("isotopy application is invertible") {
  std::mt19937 rng(20260822);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;  // orders 2..8
    const LatinSquare square = random_square(n, rng);
    const auto alpha = random_permutation(n, rng);
    const auto beta = random_permutation(n, rng);
    const auto gamma = random_permutation(n, rng);
    const LatinSquare moved = apply_isotopy(square, alpha, beta, gamma);
    CHECK(validate(moved.grid()).ok());
    CHECK(apply_isotopy(moved, alpha.inverse(), beta.inverse(), gamma.inverse()) == square);
  }
}

TEST_CASE("composing isotopies composes their triples") {
  std::mt19937 rng(7);
  const LatinSquare square = random_square(5, rng);
  const auto a1 = random_permutation(5, rng), b1 = random_permutation(5, rng),
             g1 = random_permutation(5, rng);
  const auto a2 = random_permutation(5, rng), b2 = random_permutation(5, rng),
             g2 = random_permutation(5, rng);
  const LatinSquare twice = apply_isotopy(apply_isotopy(square, a1, b1, g1), a2, b2, g2);
  CHECK(twice == apply_isotopy(square, compose(a2, a1), compose(b2, b1), compose(g2, g1)));
}

TEST_CASE("isotopy components must match the square's order") {
  const LatinSquare square = cyclic_table(3);
  const auto id4 = Permutation::identity(4);
  const auto id3 = Permutation::identity(3);
  CHECK_THROWS_AS(apply_isotopy(square, id4, id3, id3), std::invalid_argument);
}
