// Exact elimination over GF(2), the integers and the rationals, checked
// against exhaustive kernels, cofactor expansion, and cross-checked between
// the independent integer and rational elimination routes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quartic/linalg.hpp"
#include "test_support.hpp"

using namespace quartic;
using namespace support;

namespace {

std::vector<std::string> ids(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("i" + std::to_string(i));
  return out;
}

IntMatrix random_int_matrix(std::mt19937& rng, int rows, int cols, int span = 3) {
  IntMatrix m(ids(rows), ids(cols));
  std::uniform_int_distribution<int> d(-span, span);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("gf2 rank and nullity match the exhaustive kernel") {
  std::mt19937 rng(23);
  for (int round = 0; round < 30; ++round) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    Gf2Matrix m(ids(rows), ids(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.set(i, j, rng() & 1);
    int nullity = oracle_gf2_nullity(m);
    CHECK(gf2_nullity(m) == nullity);
    CHECK(gf2_rank(m) == cols - nullity);
  }
  auto zero = Gf2Matrix(ids(3), ids(3));
  CHECK(gf2_rank(zero) == 0);
  CHECK(gf2_nullity(zero) == 3);
  CHECK(gf2_rank(Gf2Matrix::identity(ids(4))) == 4);
}

TEST_CASE("gf2 inversion inverts and rejects singular input") {
  std::mt19937 rng(5);
  int inverted = 0;
  while (inverted < 10) {
    Gf2Matrix m(ids(6), ids(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m.set(i, j, rng() & 1);
    if (gf2_rank(m) < 6) {
      CHECK_THROWS_AS(gf2_inverse(m), Error);
      continue;
    }
    auto inv = gf2_inverse(m);
    CHECK(m * inv == Gf2Matrix::identity(ids(6)));
    CHECK(inv * m == Gf2Matrix::identity(ids(6)));
    ++inverted;
  }
  Gf2Matrix rect(ids(2), ids(3));
  CHECK_THROWS_AS(gf2_inverse(rect), Error);
}

TEST_CASE("gf2 row spaces compare by content, not presentation") {
  Gf2Matrix a(ids(2), ids(4));
  a.set(0, 0, true);
  a.set(0, 1, true);
  a.set(1, 2, true);
  // Same space: swapped rows plus a row sum.
  Gf2Matrix b({"x", "y", "z"}, ids(4));
  b.set(0, 2, true);
  b.set(1, 0, true);
  b.set(1, 1, true);
  b.set(2, 0, true);
  b.set(2, 1, true);
  b.set(2, 2, true);
  CHECK(gf2_row_space_equal(a, b));
  Gf2Matrix c(ids(1), ids(4));
  c.set(0, 3, true);
  CHECK_FALSE(gf2_row_space_equal(a, c));
}

TEST_CASE("integer determinants match cofactor expansion") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 5; ++n)
    for (int round = 0; round < 12; ++round) {
      auto m = random_int_matrix(rng, n, n);
      CHECK(rat_det(m) == laplace_det(m));
    }
}

TEST_CASE("zero pivots are handled by row swaps") {
  IntMatrix anti(ids(3), ids(3));
  anti.at(0, 2) = 1;
  anti.at(1, 1) = 1;
  anti.at(2, 0) = 1;
  CHECK(rat_det(anti) == -1);
  CHECK(rat_rank(anti) == 3);

  IntMatrix z(ids(2), ids(2));
  z.at(0, 1) = 1;
  z.at(1, 0) = 1;
  CHECK(rat_det(z) == -1);
}

TEST_CASE("integer and rational elimination agree on rank") {
  std::mt19937 rng(31);
  for (int round = 0; round < 25; ++round) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    auto m = random_int_matrix(rng, rows, cols);
    CHECK(rat_rank(m) == rat_rank(to_rational(m)));
  }
  // Forced low rank: duplicate and scaled rows.
  IntMatrix low(ids(3), ids(3));
  for (int j = 0; j < 3; ++j) {
    low.at(0, j) = j + 1;
    low.at(1, j) = 2 * (j + 1);
    low.at(2, j) = -3 * (j + 1);
  }
  CHECK(rat_rank(low) == 1);
  CHECK(rat_det(low) == 0);
}

TEST_CASE("rational determinants multiply along products") {
  std::mt19937 rng(13);
  for (int round = 0; round < 10; ++round) {
    auto a = random_int_matrix(rng, 4, 4);
    auto b = random_int_matrix(rng, 4, 4);
    IntMatrix b_named(a.col_ids(), a.col_ids());
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) b_named.at(i, j) = b.at(i, j);
    CHECK(rat_det(a * b_named) == rat_det(a) * rat_det(b_named));
  }
}

TEST_CASE("rational inversion produces exact inverses") {
  std::mt19937 rng(17);
  int inverted = 0;
  while (inverted < 10) {
    auto m = random_int_matrix(rng, 4, 4);
    if (rat_det(m) == 0) {
      CHECK_THROWS_AS(rat_inverse(m), Error);
      continue;
    }
    auto inv = rat_inverse(m);
    CHECK(to_rational(m) * inv == RatMatrix::identity(m.row_ids()));
    ++inverted;
  }
}

TEST_CASE("integer row spaces compare over the rationals") {
  IntMatrix a(ids(2), ids(3));
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 2) = 1;
  // Scaled and recombined rows span the same rational space.
  IntMatrix b(ids(2), ids(3));
  b.at(0, 0) = 2;
  b.at(0, 1) = 4;
  b.at(0, 2) = 6;
  b.at(1, 2) = -5;
  CHECK(row_space_equal(a, b));
  IntMatrix c(ids(1), ids(3));
  c.at(0, 1) = 1;
  CHECK_FALSE(row_space_equal(a, c));
  CHECK(row_space_equal(to_rational(a), to_rational(b)));
}
