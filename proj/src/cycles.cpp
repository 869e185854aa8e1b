#include "quartic/cycles.hpp"

#include <queue>

#include "quartic/linalg.hpp"

namespace quartic {

std::vector<Int> walk_tally(const TouchWalk& walk, const TouchGraph& t) {
  std::vector<Int> tally(t.edge_count());
  for (const TouchStep& s : walk.steps) {
    if (s.edge < 0 || s.edge >= t.edge_count()) throw Error("walk step outside touch-graph");
    tally[s.edge] += s.forward ? 1 : -1;
  }
  return tally;
}

std::vector<Int> vertex_cocycle(int circuit, const TouchGraph& t) {
  if (circuit < 0 || circuit >= t.vertex_count()) throw Error("circuit index out of range");
  std::vector<Int> u(t.edge_count());
  for (int i = 0; i < t.edge_count(); ++i) {
    const auto& e = t.edge(i);
    if (e.loop()) continue;
    if (e.tail == circuit) u[i] = 1;
    else if (e.head == circuit) u[i] = -1;
  }
  return u;
}

namespace {

std::vector<std::string> edge_names(const TouchGraph& t) {
  std::vector<std::string> names;
  names.reserve(t.edge_count());
  for (const auto& e : t.edges()) names.push_back(e.f_vertex);
  return names;
}

}  // namespace

IntMatrix cocycle_matrix(const TouchGraph& t) {
  std::vector<std::string> cols;
  for (int g = 0; g < t.vertex_count(); ++g) cols.push_back("g" + std::to_string(g));
  IntMatrix u(edge_names(t), cols);
  for (int g = 0; g < t.vertex_count(); ++g) {
    auto col = vertex_cocycle(g, t);
    for (int i = 0; i < t.edge_count(); ++i) u.at(i, g) = col[i];
  }
  return u;
}

IntMatrix cycle_basis(const TouchGraph& t) {
  const int nv = t.vertex_count();
  const int ne = t.edge_count();

  // Incident non-loop edges per circuit, ascending by edge index.
  std::vector<std::vector<int>> incident(nv);
  for (int i = 0; i < ne; ++i) {
    const auto& e = t.edge(i);
    if (e.loop()) continue;
    incident[e.tail].push_back(i);
    incident[e.head].push_back(i);
  }

  // Breadth-first forest; pot[v] is the tally of the forest walk root -> v.
  std::vector<char> visited(nv, 0);
  std::vector<char> in_forest(ne, 0);
  std::vector<std::vector<Int>> pot(nv);
  for (int root = 0; root < nv; ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    pot[root].assign(ne, 0);
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int i : incident[u]) {
        const auto& e = t.edge(i);
        int other = e.tail == u ? e.head : e.tail;
        if (visited[other]) continue;
        visited[other] = 1;
        in_forest[i] = 1;
        pot[other] = pot[u];
        pot[other][i] += e.tail == u ? 1 : -1;
        queue.push(other);
      }
    }
  }

  std::vector<int> basis_edges;
  for (int i = 0; i < ne; ++i)
    if (!in_forest[i]) basis_edges.push_back(i);

  std::vector<std::string> row_ids;
  for (size_t r = 0; r < basis_edges.size(); ++r) row_ids.push_back("z" + std::to_string(r));
  IntMatrix z(row_ids, edge_names(t));
  for (size_t r = 0; r < basis_edges.size(); ++r) {
    int i = basis_edges[r];
    const auto& e = t.edge(i);
    // Closed walk: root -> tail, across e, head -> root.
    for (int j = 0; j < ne; ++j) z.at(static_cast<int>(r), j) = pot[e.tail][j] - pot[e.head][j];
    z.at(static_cast<int>(r), i) += 1;
  }
  return z;
}

DualityReport verify_duality(const TouchGraph& t) {
  DualityReport rep;
  auto note = [&rep](const std::string& what) {
    rep.ok = false;
    rep.violations.push_back(what);
  };

  IntMatrix z = cycle_basis(t);
  IntMatrix u = cocycle_matrix(t);
  IntMatrix product = z * u;
  bool zero = true;
  for (int i = 0; i < product.rows(); ++i)
    for (int j = 0; j < product.cols(); ++j)
      if (product.at(i, j) != 0) zero = false;
  if (!zero) note("cycle/cocycle product is not zero");

  int c = t.component_count();
  rep.rank_cycle = rat_rank(z);
  rep.rank_cocycle = rat_rank(u);
  rep.expected_rank_cycle = t.edge_count() - t.vertex_count() + c;
  rep.expected_rank_cocycle = t.vertex_count() - c;
  if (rep.rank_cycle != rep.expected_rank_cycle) note("cycle rank differs from |E| - |V| + c");
  if (rep.rank_cycle != z.rows()) note("fundamental cycles are not independent");
  if (rep.rank_cocycle != rep.expected_rank_cocycle) note("cocycle rank differs from |V| - c");
  return rep;
}

MainTheoremReport verify_main_theorem(const SignedEulerSystem& c, const CircuitPartition& p) {
  MainTheoremReport rep;
  auto note = [&rep](const std::string& what) {
    rep.ok = false;
    rep.violations.push_back(what);
  };

  IntMatrix m = standard_form(c, p);
  IntMatrix traced = standard_form_by_tracing(c, p);
  rep.construction_match = m == traced;
  if (!rep.construction_match) note("case-table and traced constructions disagree");

  Gf2Matrix m2 = modified_interlacement(c, p);
  rep.mod2_match = mod2(m) == m2;
  if (!rep.mod2_match) note("integer matrix does not reduce to the GF(2) matrix");

  TouchGraph t(p, c);
  IntMatrix u = cocycle_matrix(t);
  IntMatrix product = m * u;
  rep.product_zero = true;
  for (int i = 0; i < product.rows(); ++i)
    for (int j = 0; j < product.cols(); ++j)
      if (product.at(i, j) != 0) rep.product_zero = false;
  if (!rep.product_zero) note("rows are not orthogonal to the vertex cocycles");

  IntMatrix z = cycle_basis(t);
  rep.rational_row_space = row_space_equal(m, z);
  if (!rep.rational_row_space) note("rational row space differs from the cycle space");
  rep.gf2_row_space = gf2_row_space_equal(mod2(m), mod2(z));
  if (!rep.gf2_row_space) note("GF(2) row space differs from the mod-2 cycle space");

  rep.expected_nullity = p.size() - c.graph().component_count();
  rep.rational_nullity = m.rows() - rat_rank(m);
  rep.gf2_nullity = gf2_nullity(m2);
  rep.reduced_gf2_nullity = gf2_nullity(reduced_interlacement(c, p));
  if (rep.rational_nullity != rep.expected_nullity) note("rational nullity is not |P| - c");
  if (rep.gf2_nullity != rep.expected_nullity) note("GF(2) nullity is not |P| - c");
  if (rep.reduced_gf2_nullity != rep.expected_nullity) note("reduced GF(2) nullity is not |P| - c");
  return rep;
}

}  // namespace quartic
