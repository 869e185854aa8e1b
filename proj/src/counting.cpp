#include "quartic/counting.hpp"

#include <cstdlib>
#include <thread>

#include "quartic/linalg.hpp"

namespace quartic {

namespace {

LabelMap follow_cross_labels(const SignedEulerSystem& c, std::uint64_t mask) {
  LabelMap labels;
  const auto& vertices = c.graph().sorted_vertices();
  for (size_t i = 0; i < vertices.size(); ++i)
    labels.emplace(vertices[i],
                   (mask >> i) & 1 ? TransitionLabel::phi : TransitionLabel::chi);
  return labels;
}

}  // namespace

Int count_euler_det(const SignedEulerSystem& c) {
  IntMatrix m = signed_interlacement(c);
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) += 1;
  return rat_det(m);
}

Int count_euler_brute(const SignedEulerSystem& c) {
  int n = c.graph().vertex_count();
  if (n > 20) throw Error("brute-force count refuses graphs with more than 20 vertices");
  int components = c.graph().component_count();
  Int count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    CircuitPartition p = partition_from_labels(c, follow_cross_labels(c, mask));
    if (p.size() == components) ++count;
  }
  return count;
}

DetzeroReport verify_detzero(const SignedEulerSystem& c, const CircuitPartition& p) {
  LabelMap labels = label_transitions(c, p);
  for (const auto& [v, label] : labels)
    if (label == TransitionLabel::psi)
      throw Error("determinant equivalence requires an orientation-consistent partition");

  DetzeroReport rep;
  auto note = [&rep](const std::string& what) {
    rep.ok = false;
    rep.violations.push_back(what);
  };

  rep.is_euler = p.size() == c.graph().component_count();
  IntMatrix m = standard_form(c, p);
  rep.det = rat_det(m);

  std::vector<std::string> crossing;
  for (const auto& v : c.graph().sorted_vertices())
    if (labels.at(v) == TransitionLabel::chi) crossing.push_back(v);
  rep.reduced_det = rat_det(principal_submatrix(m, crossing));

  if (rep.det != 0 && rep.det != 1) note("determinant outside {0, 1}");
  if (rep.det != rep.reduced_det) note("full and reduced determinants differ");
  if (rep.is_euler != (rep.det == 1)) note("determinant does not indicate the Euler property");
  return rep;
}

Rat indicator_polynomial(const SignedEulerSystem& c, const std::map<VertexId, Rat>& assignment) {
  IntMatrix s = signed_interlacement(c);
  RatMatrix m = to_rational(s);
  for (int i = 0; i < m.rows(); ++i) {
    auto it = assignment.find(m.row_ids()[i]);
    if (it == assignment.end())
      throw Error("assignment misses vertex '" + m.row_ids()[i] + "'");
    m.at(i, i) += it->second;
  }
  return rat_det(m);
}

CensusReport partition_census(const SignedEulerSystem& c, int max_vertices) {
  int n = c.graph().vertex_count();
  if (n > max_vertices)
    throw Error("census sweep refuses graphs with more than " + std::to_string(max_vertices) +
                " vertices");

  std::uint64_t total = partition_count(c);
  int workers = 1;
  if (const char* env = std::getenv("QUARTIC_WORKERS")) {
    int parsed = std::atoi(env);
    if (parsed >= 1 && parsed <= 64) workers = parsed;
  }
  workers = static_cast<int>(std::min<std::uint64_t>(workers, total));

  int components = c.graph().component_count();
  std::vector<CensusReport> partial(workers);
  auto sweep = [&](int worker) {
    CensusReport& local = partial[worker];
    for (std::uint64_t index = worker; index < total; index += workers) {
      CircuitPartition p = partition_at(c, index);
      local.by_circuits[p.size()] += 1;
      local.total += 1;
      int nullity = gf2_nullity(reduced_interlacement(c, p));
      if (nullity != p.size() - components) {
        local.ok = false;
        if (local.violations.size() < 10)
          local.violations.push_back("nullity formula fails at partition index " +
                                     std::to_string(index));
      }
    }
  };

  if (workers == 1) {
    sweep(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(sweep, w);
    for (auto& t : threads) t.join();
  }

  CensusReport report;
  for (const auto& local : partial) {
    for (const auto& [size, count] : local.by_circuits) report.by_circuits[size] += count;
    report.total += local.total;
    if (!local.ok) report.ok = false;
    for (const auto& v : local.violations)
      if (report.violations.size() < 10) report.violations.push_back(v);
  }
  return report;
}

}  // namespace quartic
