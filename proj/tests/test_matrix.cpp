// Matrix containers, GF(2) bit rows, and the interlacement constructions,
// pinned against stored matrices and cross-checked between the two
// independent construction routes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quartic/linalg.hpp"
#include "quartic/matrix.hpp"
#include "test_support.hpp"

using namespace quartic;
using namespace support;

TEST_CASE("matrix containers guard their index ids") {
  IntMatrix a({"r1", "r2"}, {"c1", "c2", "c3"});
  a.at(0, 0) = 2;
  a.at(1, 2) = -5;
  CHECK(a.row_index("r2") == 1);
  CHECK_THROWS_AS(a.col_index("nope"), Error);
  CHECK_THROWS_AS(a.at(2, 0), Error);

  auto t = a.transposed();
  CHECK(t.at(2, 1) == -5);
  CHECK(t.row_ids() == a.col_ids());

  IntMatrix b({"x"}, {"c1", "c2", "c3"});
  auto s = a.stacked(b);
  CHECK(s.rows() == 3);
  CHECK(s.at(2, 0) == 0);

  // Products require matching inner ids, not just matching sizes.
  IntMatrix wrong({"q1", "q2", "q3"}, {"z"});
  CHECK_THROWS_AS(a * wrong, Error);

  auto id = IntMatrix::identity({"c1", "c2", "c3"});
  CHECK(a * id == a);

  IntMatrix sq({"u", "v"}, {"u", "v"});
  sq.at(0, 1) = 7;
  auto sub = principal_submatrix(sq, std::vector<std::string>{"v", "u"});
  CHECK(sub.at(1, 0) == 7);
  // Ids absent from the matrix are rejected, for rows and columns alike.
  CHECK_THROWS_AS(principal_submatrix(a.stacked(b), std::vector<std::string>{"c3", "c1"}), Error);
}

TEST_CASE("gf2 rows behave like bit vectors") {
  Gf2Matrix m({"r0", "r1"}, {"c0", "c1", "c2"});
  m.set(0, 0, true);
  m.set(0, 2, true);
  m.set(1, 1, true);
  CHECK(m.at(0, 2));
  CHECK_FALSE(m.at(0, 1));
  m.add_row(0, 1);
  CHECK(m.at(1, 0));
  CHECK(m.at(1, 1));
  CHECK(m.at(1, 2));
  m.add_row(0, 1);
  CHECK_FALSE(m.at(1, 0));

  auto id = Gf2Matrix::identity({"c0", "c1", "c2"});
  CHECK(m * id == m);
}

TEST_CASE("gf2 product matches a bit-by-bit computation") {
  std::mt19937 rng(11);
  std::vector<std::string> ids{"0", "1", "2", "3", "4", "5", "6"};
  for (int round = 0; round < 10; ++round) {
    Gf2Matrix a(ids, ids), b(ids, ids);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        a.set(i, j, rng() & 1);
        b.set(i, j, rng() & 1);
      }
    auto c = a * b;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        int bit = 0;
        for (int k = 0; k < 7; ++k) bit ^= (a.at(i, k) && b.at(k, j)) ? 1 : 0;
        CHECK(c.at(i, j) == (bit == 1));
      }
  }
}

TEST_CASE("ring conversions preserve entries and reject fractions") {
  IntMatrix a({"r"}, {"x", "y"});
  a.at(0, 0) = 3;
  a.at(0, 1) = -4;
  auto r = to_rational(a);
  CHECK(r.at(0, 0) == Rat(3));
  CHECK(to_integer(r) == a);
  r.at(0, 1) = Rat(1, 2);
  CHECK_THROWS_AS(to_integer(r), Error);

  auto g = mod2(a);
  CHECK(g.at(0, 0));
  CHECK_FALSE(g.at(0, 1));  // -4 is even
}

TEST_CASE("interlacement matrices mirror the word queries") {
  for (const auto* name : {"k5_signed1.dow", "eight.dow", "two_triangles.dow"}) {
    auto sys = load_system(name);
    auto gf2 = interlacement(sys);
    auto sgn = signed_interlacement(sys);
    const auto& vs = sys.graph().sorted_vertices();
    CHECK(gf2.row_ids() == vs);
    CHECK(sgn.row_ids() == vs);
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = 0; j < vs.size(); ++j) {
        CHECK(gf2.at(i, j) == sys.interlaced(vs[i], vs[j]));
        CHECK(sgn.at(i, j) == sys.signed_interlacement_entry(vs[i], vs[j]));
        CHECK(sgn.at(i, j) == -sgn.at(j, i));  // skew-symmetric
      }
    CHECK(mod2(sgn) == gf2);
  }
}

TEST_CASE("modified interlacement turns follow columns into basis columns") {
  auto sys = load_system("eight.dow");
  auto p = load_partition("eight.labels", sys);
  auto m = modified_interlacement(sys, p);
  auto labels = label_transitions(sys, p);
  const auto& vs = sys.graph().sorted_vertices();
  for (size_t j = 0; j < vs.size(); ++j) {
    if (labels.at(vs[j]) != TransitionLabel::phi) continue;
    for (size_t i = 0; i < vs.size(); ++i) CHECK(m.at(i, j) == (i == j));
  }
  for (size_t i = 0; i < vs.size(); ++i) {
    if (labels.at(vs[i]) == TransitionLabel::psi) CHECK(m.at(i, i));
    if (labels.at(vs[i]) == TransitionLabel::chi) CHECK_FALSE(m.at(i, i));
  }

  // The reduced matrix is the non-follow principal block.
  auto reduced = reduced_interlacement(sys, p);
  for (size_t i = 0; i < reduced.row_ids().size(); ++i)
    for (size_t j = 0; j < reduced.col_ids().size(); ++j)
      CHECK(reduced.at(i, j) ==
            m.at(m.row_index(reduced.row_ids()[i]), m.col_index(reduced.col_ids()[j])));
}

TEST_CASE("stored matrices reproduce byte for byte") {
  auto tri = load_system("doubled_triangle.dow");
  auto p_tri = load_partition("doubled_triangle_allpsi.labels", tri);
  CHECK(to_tsv(standard_form(tri, p_tri)) == read_fixture("allones3.tsv"));

  auto eight = load_system("eight.dow");
  auto p8 = load_partition("eight.labels", eight);
  CHECK(to_tsv(standard_form(eight, p8)) == read_fixture("eight_m0.tsv"));

  auto k5a = load_system("k5_signed1.dow");
  auto cp_a = load_partition("k5_cprime.dow", k5a);
  CHECK(to_tsv(standard_form(k5a, cp_a)) == read_fixture("m_c_cp_1.tsv"));

  auto k5b = load_system("k5_signed2.dow");
  auto cp_b = load_partition("k5_cprime.dow", k5b);
  CHECK(to_tsv(standard_form(k5b, cp_b)) == read_fixture("m_c_cp_2.tsv"));
}

TEST_CASE("both construction routes agree on every partition") {
  for (const auto* name : {"doubled_triangle.dow", "loop.dow", "two_triangles.dow"}) {
    auto sys = load_system(name);
    for (std::uint64_t i = 0; i < partition_count(sys); ++i) {
      auto p = partition_at(sys, i);
      CHECK(standard_form(sys, p) == standard_form_by_tracing(sys, p));
    }
  }
  auto k5 = load_system("k5_signed2.dow");
  for (std::uint64_t i = 0; i < partition_count(k5); i += 5) {
    auto p = partition_at(k5, i);
    CHECK(standard_form(k5, p) == standard_form_by_tracing(k5, p));
  }
}

TEST_CASE("sign flips leave the GF(2) matrix alone") {
  auto sys = load_system("k5_signed1.dow");
  auto p = load_partition("k5_cprime.dow", sys);
  auto m = standard_form(sys, p);
  for (const auto& v : sys.graph().sorted_vertices()) {
    auto flipped = flip_sign(sys, v);
    auto fm = standard_form(flipped, p);
    CHECK(mod2(fm) == mod2(m));
    CHECK(modified_interlacement(flipped, p) == modified_interlacement(sys, p));
  }
}

TEST_CASE("block structure follows the transition labels") {
  auto eight = load_system("eight.dow");
  auto p8 = load_partition("eight.labels", eight);
  auto report = submatrix_blocks(standard_form(eight, p8), label_transitions(eight, p8));
  CHECK(report.ok);
  for (const auto& v : report.violations) MESSAGE(v);
  CHECK(report.phi == std::vector<VertexId>{"a"});
  CHECK(report.chi == std::vector<VertexId>{"e", "g"});
  CHECK(report.psi.size() == 5);

  auto k5 = load_system("k5_signed2.dow");
  for (std::uint64_t i = 0; i < partition_count(k5); i += 3) {
    auto p = partition_at(k5, i);
    auto r = submatrix_blocks(standard_form(k5, p), label_transitions(k5, p));
    CHECK(r.ok);
    for (const auto& v : r.violations) MESSAGE(v);
  }
}

TEST_CASE("hex packing puts column zero in the top bit") {
  Gf2Matrix m({"r"}, {"c0", "c1", "c2", "c3", "c4"});
  m.set(0, 0, true);
  m.set(0, 4, true);
  CHECK(to_hex(m) == "r\t88\n");  // 1000 1000 over five columns, padded
}

TEST_CASE("json serialization carries ids and entries") {
  auto sys = load_system("doubled_triangle.dow");
  auto p = load_partition("doubled_triangle_allpsi.labels", sys);
  auto text = to_json(standard_form(sys, p));
  CHECK(text.find("\"rows\":[\"a\",\"b\",\"c\"]") != std::string::npos);
  CHECK(text.find("\"entries\"") != std::string::npos);
}
