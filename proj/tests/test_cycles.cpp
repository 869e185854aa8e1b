// Cycle and cocycle spaces of touch-graphs, their duality, and the full
// per-partition verification combining row spaces, reductions and nullities.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quartic/cycles.hpp"
#include "quartic/linalg.hpp"
#include "test_support.hpp"

using namespace quartic;
using namespace support;

TEST_CASE("cocycle rows are signed incidences") {
  auto sys = load_system("eight.dow");
  auto p = load_partition("eight.labels", sys);
  TouchGraph t(p, sys);
  auto u = cocycle_matrix(t);
  CHECK(u.rows() == t.edge_count());
  CHECK(u.cols() == t.vertex_count());
  for (int i = 0; i < u.rows(); ++i) {
    const auto& e = t.edge(i);
    Int sum = 0;
    for (int j = 0; j < u.cols(); ++j) sum += u.at(i, j);
    CHECK(sum == 0);
    if (e.loop()) {
      for (int j = 0; j < u.cols(); ++j) CHECK(u.at(i, j) == 0);
    } else {
      CHECK(u.at(i, e.tail) == 1);
      CHECK(u.at(i, e.head) == -1);
    }
  }
}

TEST_CASE("cycle basis rows are independent and orthogonal to cocycles") {
  for (const auto* name : {"doubled_triangle.dow", "loop.dow", "two_triangles.dow"}) {
    auto sys = load_system(name);
    for (std::uint64_t i = 0; i < partition_count(sys); ++i) {
      auto p = partition_at(sys, i);
      TouchGraph t(p, sys);
      auto z = cycle_basis(t);
      auto u = cocycle_matrix(t);
      CHECK(z.rows() == t.edge_count() - t.vertex_count() + t.component_count());
      CHECK(rat_rank(z) == z.rows());
      auto zu = z * u;
      for (int r = 0; r < zu.rows(); ++r)
        for (int c = 0; c < zu.cols(); ++c) CHECK(zu.at(r, c) == 0);
    }
  }
}

TEST_CASE("duality reports hold across whole partition sweeps") {
  for (const auto* name : {"doubled_triangle.dow", "loop.dow", "two_triangles.dow"}) {
    auto sys = load_system(name);
    for (std::uint64_t i = 0; i < partition_count(sys); ++i) {
      auto rep = verify_duality(TouchGraph(partition_at(sys, i), sys));
      CHECK(rep.ok);
      for (const auto& v : rep.violations) MESSAGE(v);
      CHECK(rep.rank_cycle == rep.expected_rank_cycle);
      CHECK(rep.rank_cocycle == rep.expected_rank_cocycle);
    }
  }
  auto k5 = load_system("k5_signed1.dow");
  for (std::uint64_t i = 0; i < partition_count(k5); i += 11)
    CHECK(verify_duality(TouchGraph(partition_at(k5, i), k5)).ok);
}

TEST_CASE("projecting the whole Euler circuit doubles the all-reroute cycle") {
  auto sys = load_system("doubled_triangle.dow");
  LabelMap all_psi;
  for (const auto& v : sys.graph().sorted_vertices())
    all_psi.emplace(v, TransitionLabel::psi);
  TouchGraph t(partition_from_labels(sys, all_psi), sys);
  auto tally = walk_tally(project_walk(component_walk(sys, 0), t), t);
  REQUIRE(tally.size() == 3);
  // Both passages through each vertex arrive on the same transition side, so
  // every touch edge is crossed twice in the same direction.
  CHECK(tally == std::vector<Int>{2, 2, 2});
}

TEST_CASE("full verification holds on the stored examples") {
  auto tri = load_system("doubled_triangle.dow");
  auto rep1 = verify_main_theorem(tri, load_partition("doubled_triangle_allpsi.labels", tri));
  CHECK(rep1.ok);
  CHECK(rep1.rational_nullity == 2);
  CHECK(rep1.gf2_nullity == 2);
  CHECK(rep1.expected_nullity == 2);

  auto eight = load_system("eight.dow");
  auto rep2 = verify_main_theorem(eight, load_partition("eight.labels", eight));
  CHECK(rep2.ok);
  for (const auto& v : rep2.violations) MESSAGE(v);
  CHECK(rep2.expected_nullity == 3);  // four circuits, one component
  CHECK(rep2.rational_nullity == 3);
  CHECK(rep2.construction_match);
  CHECK(rep2.mod2_match);
  CHECK(rep2.product_zero);
  CHECK(rep2.rational_row_space);
  CHECK(rep2.gf2_row_space);
}

TEST_CASE("full verification sweeps small graphs") {
  for (const auto* name : {"doubled_triangle.dow", "loop.dow", "two_triangles.dow"}) {
    auto sys = load_system(name);
    int components = sys.graph().component_count();
    for (std::uint64_t i = 0; i < partition_count(sys); ++i) {
      auto p = partition_at(sys, i);
      auto rep = verify_main_theorem(sys, p);
      CHECK(rep.ok);
      for (const auto& v : rep.violations) MESSAGE(name << " #" << i << ": " << v);
      CHECK(rep.expected_nullity == p.size() - components);
    }
  }
}
