// Transitions, circuit partitions, their enumeration, parsing, and the
// touch-graph construction. Circuit tracing is cross-checked against an
// independent orbit computation on half-edges.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "quartic/partition.hpp"
#include "test_support.hpp"

using namespace quartic;
using namespace support;

namespace {

// Independent circuit count: orbits of departure -> partner(mate(departure)).
int oracle_circuit_count(const FourRegularGraph& g, const TransitionMap& t) {
  std::set<int> seen;
  int orbits = 0;
  for (int h = 0; h < g.half_edge_count(); ++h) {
    if (seen.count(h)) continue;
    ++orbits;
    int cur = h;
    do {
      seen.insert(cur);
      seen.insert(g.mate(cur));
      cur = t.at(g.vertex_of(g.mate(cur))).partner(g.mate(cur));
    } while (cur != h);
  }
  return orbits;
}

}  // namespace

TEST_CASE("transitions normalize and answer pair queries") {
  Transition t({3, 1}, {0, 2});
  CHECK(t.first_pair() == std::array<int, 2>{0, 2});
  CHECK(t.second_pair() == std::array<int, 2>{1, 3});
  CHECK(t.partner(0) == 2);
  CHECK(t.partner(3) == 1);
  CHECK(t.contains(1));
  CHECK_FALSE(t.contains(7));
  CHECK(t.side_of(2) == 0);
  CHECK(t.side_of(1) == 1);
  CHECK(Transition({1, 3}, {2, 0}) == t);
  CHECK_THROWS_AS(Transition({0, 1}, {1, 2}), Error);
  CHECK_THROWS_AS(t.partner(9), Error);
}

TEST_CASE("the all-follow partition reproduces the Euler system's circuits") {
  auto sys = load_system("k5_signed1.dow");
  auto p = partition_of(sys);
  CHECK(p.size() == 1);
  auto labels = label_transitions(sys, p);
  for (const auto& [v, label] : labels) CHECK(label == TransitionLabel::phi);

  auto induced = partition_induced_by(sys);
  CHECK(induced.transitions() == p.transitions());
}

TEST_CASE("labels round-trip through transition_from_label") {
  auto sys = load_system("eight.dow");
  for (auto label : {TransitionLabel::phi, TransitionLabel::chi, TransitionLabel::psi}) {
    LabelMap all;
    for (const auto& v : sys.graph().sorted_vertices()) all.emplace(v, label);
    auto p = partition_from_labels(sys, all);
    for (const auto& [v, got] : label_transitions(sys, p)) CHECK(got == label);
  }
}

TEST_CASE("circuit tracing matches the orbit oracle") {
  auto tri = load_system("doubled_triangle.dow");
  for (std::uint64_t i = 0; i < partition_count(tri); ++i) {
    auto p = partition_at(tri, i);
    CHECK(p.size() == oracle_circuit_count(tri.graph(), p.transitions()));
    // Both half-edges of an edge sit on the same circuit.
    for (int h = 0; h < tri.graph().half_edge_count(); ++h)
      CHECK(p.circuit_of(h) == p.circuit_of(tri.graph().mate(h)));
  }

  auto k5 = load_system("k5_signed1.dow");
  for (std::uint64_t i = 0; i < partition_count(k5); i += 7) {
    auto p = partition_at(k5, i);
    CHECK(p.size() == oracle_circuit_count(k5.graph(), p.transitions()));
  }
}

TEST_CASE("circuit traces cover every edge exactly once") {
  auto sys = load_system("eight.dow");
  auto p = load_partition("eight.labels", sys);
  CHECK(p.size() == 4);
  std::set<int> edges;
  int steps = 0;
  for (const auto& circ : p.circuits()) {
    REQUIRE(circ.trace.size() % 2 == 0);
    for (int i = 0; i < circ.length(); ++i) {
      int dep = circ.trace[2 * i], arr = circ.trace[2 * i + 1];
      CHECK(sys.graph().mate(dep) == arr);
      edges.insert(dep / 2);
      ++steps;
    }
  }
  CHECK(steps == sys.graph().edge_count());
  CHECK(static_cast<int>(edges.size()) == sys.graph().edge_count());
}

// Transitions are stored normalized, so this flat rendering is a faithful key.
static std::string transition_key(const TransitionMap& t) {
  std::string key;
  for (const auto& [v, tr] : t) {
    key += v + ":";
    for (int h : tr.first_pair()) key += " " + std::to_string(h);
    key += " |";
    for (int h : tr.second_pair()) key += " " + std::to_string(h);
    key += ";";
  }
  return key;
}

TEST_CASE("partition enumeration is a bijection onto all label assignments") {
  auto tri = load_system("doubled_triangle.dow");
  CHECK(partition_count(tri) == 27);
  std::set<std::string> distinct;
  std::map<int, int> by_size;
  for (std::uint64_t i = 0; i < 27; ++i) {
    auto p = partition_at(tri, i);
    distinct.insert(transition_key(p.transitions()));
    by_size[p.size()] += 1;
    // The label assignment backing index i reproduces the same partition.
    auto labels = label_assignment_at(tri, i);
    CHECK(label_transitions(tri, p) == labels);
  }
  CHECK(distinct.size() == 27);

  auto loop = load_system("loop.dow");
  CHECK(partition_count(loop) == 3);
  std::set<std::string> loop_distinct;
  for (std::uint64_t i = 0; i < 3; ++i)
    loop_distinct.insert(transition_key(partition_at(loop, i).transitions()));
  CHECK(loop_distinct.size() == 3);
}

TEST_CASE("partition files parse in all three forms") {
  auto sys = load_system("eight.dow");

  auto from_labels = load_partition("eight.labels", sys);
  auto labels = label_transitions(sys, from_labels);
  CHECK(labels.at("a") == TransitionLabel::phi);
  CHECK(labels.at("e") == TransitionLabel::chi);
  CHECK(labels.at("g") == TransitionLabel::chi);
  CHECK(labels.at("b") == TransitionLabel::psi);

  // tr form: print the same transitions and parse them back.
  std::string tr_text;
  for (const auto& [v, t] : from_labels.transitions())
    tr_text += "tr " + v + ": " + std::to_string(t.first_pair()[0]) + " " +
               std::to_string(t.first_pair()[1]) + " | " + std::to_string(t.second_pair()[0]) +
               " " + std::to_string(t.second_pair()[1]) + "\n";
  auto from_tr = parse_partition(tr_text, sys);
  CHECK(from_tr.transitions() == from_labels.transitions());

  // dow form: a partition presented as another Euler system.
  auto k5 = load_system("k5.dow");
  auto from_dow = parse_partition(read_fixture("k5_cprime.dow"), k5);
  CHECK(from_dow.size() == 1);
  CHECK(from_dow.transitions() ==
        partition_induced_by(realize_in_graph(k5.graph_ptr(), read_fixture("k5_cprime.dow")))
            .transitions());
}

TEST_CASE("partition parsing rejects malformed input") {
  auto sys = load_system("doubled_triangle.dow");
  CHECK_THROWS_AS(parse_partition("", sys), Error);
  CHECK_THROWS_AS(parse_partition("label q: phi\n", sys), ParseError);   // unknown vertex
  CHECK_THROWS_AS(parse_partition("label a: bogus\n", sys), ParseError);
  CHECK_THROWS_AS(parse_partition("label a phi\n", sys), ParseError);    // missing ':'
  CHECK_THROWS_AS(parse_partition("label a: phi\nlabel a: chi\nlabel b: phi\nlabel c: phi\n", sys),
                  ParseError);                                           // duplicate
  CHECK_THROWS_AS(parse_partition("label a: phi\n", sys), Error);        // b, c missing
  CHECK_THROWS_AS(parse_partition("label a: phi\ntr b: 0 1 | 2 3\n", sys), ParseError);
  CHECK_THROWS_AS(parse_partition("tr a: 0 1 2 3\ntr b: 4 5 | 6 7\ntr c: 8 9 | 10 11\n", sys),
                  ParseError);                                           // missing '|'
  CHECK_THROWS_AS(parse_partition("nonsense\n", sys), ParseError);

  try {
    parse_partition("label a: phi\nlabel b: wat\nlabel c: phi\n", sys);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("tr lines must describe real transitions at their vertex") {
  auto sys = load_system("doubled_triangle.dow");
  // Half-edges 0..3 are not all incident to one vertex here, so the partition
  // constructor must reject a pairing that straddles vertices.
  std::string text = "tr a: 0 1 | 2 3\ntr b: 4 5 | 6 7\ntr c: 8 9 | 10 11\n";
  CHECK_THROWS_AS(parse_partition(text, sys), Error);
}

TEST_CASE("touch-graph of the all-reroute triangle partition is a directed K3") {
  auto sys = load_system("doubled_triangle.dow");
  LabelMap all_psi;
  for (const auto& v : sys.graph().sorted_vertices())
    all_psi.emplace(v, TransitionLabel::psi);
  auto p = partition_from_labels(sys, all_psi);
  REQUIRE(p.size() == 3);

  TouchGraph t(p, sys);
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t.component_count() == 1);

  // Identify each circuit by the base vertices it avoids: the circuit made of
  // the two a-b edges avoids c, and so on.
  auto circuit_avoiding = [&](const VertexId& missing) {
    for (int ci = 0; ci < p.size(); ++ci) {
      std::set<VertexId> touched;
      for (int h : p.circuits()[ci].trace) touched.insert(sys.graph().vertex_of(h));
      if (!touched.count(missing)) return ci;
    }
    FAIL("no circuit avoids " << missing);
    return -1;
  };
  int ab = circuit_avoiding("c"), ac = circuit_avoiding("b"), bc = circuit_avoiding("a");
  // Directions fixed by the signing a+ b- c+ a- b+ c-.
  CHECK(t.edge(t.edge_index("a")).tail == ac);
  CHECK(t.edge(t.edge_index("a")).head == ab);
  CHECK(t.edge(t.edge_index("b")).tail == ab);
  CHECK(t.edge(t.edge_index("b")).head == bc);
  CHECK(t.edge(t.edge_index("c")).tail == bc);
  CHECK(t.edge(t.edge_index("c")).head == ac);
}

TEST_CASE("the all-follow partition yields loops only") {
  auto sys = load_system("two_triangles.dow");
  auto p = partition_of(sys);
  TouchGraph t(p, sys);
  CHECK(t.vertex_count() == 2);
  CHECK(t.component_count() == 2);
  for (const auto& e : t.edges()) CHECK(e.loop());
}

TEST_CASE("fundamental circuit splitting partitions the component") {
  auto sys = load_system("k5_signed1.dow");
  for (const auto& v : sys.graph().sorted_vertices()) {
    auto [first, second] = fundamental_circuits(sys, v);
    const auto& pass = sys.passages(v);
    const auto& comp = sys.components().at(pass.component);
    CHECK(static_cast<int>(first.steps.size() + second.steps.size()) == comp.length());
    // First trail departs at the '-' passage and runs to the '+' passage.
    CHECK(first.steps.front().first == pass.leave_minus);
    CHECK(second.steps.front().first == pass.leave_plus);
    std::multiset<std::pair<int, int>> all(first.steps.begin(), first.steps.end());
    all.insert(second.steps.begin(), second.steps.end());
    std::multiset<std::pair<int, int>> whole;
    for (int i = 0; i < comp.length(); ++i)
      whole.insert({comp.trace[2 * i], comp.trace[2 * i + 1]});
    CHECK(all == whole);
  }
}

TEST_CASE("walks that follow the partition project to nothing") {
  auto sys = load_system("k5_signed1.dow");
  auto p = partition_of(sys);
  TouchGraph t(p, sys);
  auto projected = project_walk(component_walk(sys, 0), t);
  CHECK(projected.steps.empty());
}

TEST_CASE("circuits correspond to graph components for every partition") {
  for (const auto* name : {"doubled_triangle.dow", "two_triangles.dow", "loop.dow"}) {
    auto sys = load_system(name);
    for (std::uint64_t i = 0; i < partition_count(sys); ++i) {
      auto p = partition_at(sys, i);
      auto report = components_correspondence(p, sys);
      CHECK(report.ok);
      if (!report.ok)
        for (const auto& f : report.failures) MESSAGE(f);
    }
  }
}
