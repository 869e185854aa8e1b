#include "quartic/transforms.hpp"

#include <algorithm>
#include <map>

#include "quartic/cycles.hpp"
#include "quartic/linalg.hpp"

namespace quartic {

namespace {

// A component unrolled into parallel occurrence/step arrays, rotated so the
// occurrence at `offset` comes first. steps[i] = {departing, arriving}.
struct Unrolled {
  std::vector<SignedOccurrence> word;
  std::vector<std::array<int, 2>> steps;
};

Unrolled unroll(const EulerComponent& comp, int offset) {
  int n = comp.length();
  Unrolled u;
  u.word.reserve(n);
  u.steps.reserve(n);
  for (int i = 0; i < n; ++i) {
    int j = (offset + i) % n;
    u.word.push_back(comp.word[j]);
    u.steps.push_back({comp.trace[2 * j], comp.trace[2 * j + 1]});
  }
  return u;
}

EulerComponent assemble(std::string name, std::vector<SignedOccurrence> word,
                        const std::vector<std::array<int, 2>>& steps) {
  EulerComponent out{std::move(name), std::move(word), {}};
  out.trace.reserve(steps.size() * 2);
  for (const auto& s : steps) {
    out.trace.push_back(s[0]);
    out.trace.push_back(s[1]);
  }
  return out;
}

SignedEulerSystem with_component(const SignedEulerSystem& c, int index, EulerComponent comp) {
  auto comps = c.components();
  comps[static_cast<size_t>(index)] = std::move(comp);
  return SignedEulerSystem(c.graph_ptr(), std::move(comps));
}

std::array<int, 2> flipped_step(const std::array<int, 2>& s) { return {s[1], s[0]}; }

}  // namespace

std::array<SignedEulerSystem, 2> kappa_transform(const SignedEulerSystem& c, const VertexId& v) {
  const auto& pas = c.passages(v);
  const auto& comp = c.component(pas.component);
  int n = comp.length();
  auto u = unroll(comp, pas.minus_pos);
  int k = (pas.plus_pos - pas.minus_pos + n) % n;

  // Variant 0 reverses the trail running from the '-' occurrence (position 0)
  // to the '+' occurrence (position k); a reversed step departs its original
  // arrival half-edge.
  std::vector<SignedOccurrence> word0;
  std::vector<std::array<int, 2>> steps0;
  word0.push_back(u.word[0]);
  for (int i = k - 1; i >= 1; --i) word0.push_back(u.word[i]);
  for (int i = k; i < n; ++i) word0.push_back(u.word[i]);
  for (int i = k - 1; i >= 0; --i) steps0.push_back(flipped_step(u.steps[i]));
  for (int i = k; i < n; ++i) steps0.push_back(u.steps[i]);

  // Variant 1 reverses the complementary trail.
  std::vector<SignedOccurrence> word1;
  std::vector<std::array<int, 2>> steps1;
  for (int i = 0; i <= k && i < n; ++i) word1.push_back(u.word[i]);
  for (int i = n - 1; i >= k + 1; --i) word1.push_back(u.word[i]);
  for (int i = 0; i < k; ++i) steps1.push_back(u.steps[i]);
  for (int i = n - 1; i >= k; --i) steps1.push_back(flipped_step(u.steps[i]));

  return {with_component(c, pas.component, assemble(comp.name, std::move(word0), steps0)),
          with_component(c, pas.component, assemble(comp.name, std::move(word1), steps1))};
}

SignedEulerSystem transposition(const SignedEulerSystem& c, const VertexId& v, const VertexId& w) {
  if (!c.interlaced(v, w))
    throw Error("transposition requires interlaced vertices ('" + v + "', '" + w + "')");
  const auto& pas = c.passages(v);
  const auto& comp = c.component(pas.component);
  int n = comp.length();
  auto u = unroll(comp, pas.plus_pos);

  int p2 = (pas.minus_pos - pas.plus_pos + n) % n;
  int q1 = -1, q2 = -1;  // w positions before/after the second v occurrence
  for (int i = 1; i < n; ++i)
    if (u.word[i].vertex == w) (i < p2 ? q1 : q2) = i;

  // v T1 w T2 v T3 w T4  becomes  v T3 w T2 v T1 w T4; every step is reused
  // verbatim, only the four junctions at v and w are re-paired.
  std::vector<SignedOccurrence> word;
  std::vector<std::array<int, 2>> steps;
  word.push_back(u.word[0]);
  for (int i = p2 + 1; i <= q2; ++i) word.push_back(u.word[i]);
  for (int i = q1 + 1; i <= p2; ++i) word.push_back(u.word[i]);
  for (int i = 1; i <= q1; ++i) word.push_back(u.word[i]);
  for (int i = q2 + 1; i < n; ++i) word.push_back(u.word[i]);

  steps.push_back(u.steps[p2]);
  for (int i = p2 + 1; i < q2; ++i) steps.push_back(u.steps[i]);
  steps.push_back(u.steps[q1]);
  for (int i = q1 + 1; i < p2; ++i) steps.push_back(u.steps[i]);
  steps.push_back(u.steps[0]);
  for (int i = 1; i < q1; ++i) steps.push_back(u.steps[i]);
  steps.push_back(u.steps[q2]);
  for (int i = q2 + 1; i < n; ++i) steps.push_back(u.steps[i]);

  return with_component(c, pas.component, assemble(comp.name, std::move(word), steps));
}

NaturalityReport verify_gf2_naturality(const SignedEulerSystem& c, const SignedEulerSystem& c_prime,
                                       const CircuitPartition& p) {
  NaturalityReport rep;
  auto note = [&rep](const std::string& what) {
    rep.ok = false;
    rep.violations.push_back(what);
  };

  CircuitPartition c_as_p = partition_induced_by(c);
  CircuitPartition cp_as_p = partition_induced_by(c_prime);
  Gf2Matrix m_cp_p = modified_interlacement(c_prime, p);
  Gf2Matrix m_cp_c = modified_interlacement(c_prime, c_as_p);
  Gf2Matrix m_c_p = modified_interlacement(c, p);
  Gf2Matrix m_c_cp = modified_interlacement(c, cp_as_p);

  if (!(m_cp_p == m_cp_c * m_c_p)) note("pair product identity fails");
  if (!(m_c_cp * m_cp_c == Gf2Matrix::identity(m_c_cp.row_ids()))) note("pair inverse identity fails");
  return rep;
}

NaturalityReport verify_kappa_naturality(const SignedEulerSystem& c, const VertexId& v,
                                         const CircuitPartition& p) {
  NaturalityReport rep;
  auto note = [&rep](const std::string& what) {
    rep.ok = false;
    rep.violations.push_back(what);
  };

  Gf2Matrix expected = modified_interlacement(c, p);
  Gf2Matrix inter = interlacement(c);
  int vi = expected.row_index(v);
  for (int w = 0; w < expected.rows(); ++w)
    if (w != vi && inter.at(vi, w)) expected.add_row(vi, w);

  auto rewritten = kappa_transform(c, v);
  for (int variant = 0; variant < 2; ++variant) {
    const auto& cp = rewritten[static_cast<size_t>(variant)];
    if (!(modified_interlacement(cp, p) == expected))
      note("row-addition identity fails for variant " + std::to_string(variant));
    auto pair = verify_gf2_naturality(c, cp, p);
    for (auto& item : pair.violations)
      note("variant " + std::to_string(variant) + ": " + item);
  }
  return rep;
}

RealNaturalityReport verify_real_naturality(const SignedEulerSystem& c,
                                            const SignedEulerSystem& c_prime,
                                            const CircuitPartition& p) {
  RealNaturalityReport rep;
  auto note = [&rep](const std::string& what) {
    rep.ok = false;
    rep.violations.push_back(what);
  };

  CircuitPartition c_as_p = partition_induced_by(c);
  CircuitPartition cp_as_p = partition_induced_by(c_prime);
  IntMatrix m_c_cp = standard_form(c, cp_as_p);
  rep.det = rat_det(m_c_cp);
  if (rep.det % 2 == 0) note("det of the pair matrix is even");

  if (rep.det != 0) {
    RatMatrix scaled = rat_inverse(m_c_cp);
    for (int i = 0; i < scaled.rows(); ++i)
      for (int j = 0; j < scaled.cols(); ++j) scaled.at(i, j) *= Rat(rep.det);
    try {
      IntMatrix integral = to_integer(scaled);
      if (!(mod2(integral) == modified_interlacement(c_prime, c_as_p)))
        note("scaled inverse does not reduce to the reversed pair matrix");
    } catch (const Error&) {
      note("scaled inverse is not an integer matrix");
    }
  }

  IntMatrix product = standard_form(c_prime, c_as_p) * standard_form(c, p);
  if (!(mod2(product) == modified_interlacement(c_prime, p)))
    note("pair product does not reduce to the rewritten matrix");
  TouchGraph t(p, c);
  if (!row_space_equal(product, cycle_basis(t)))
    note("pair product row space differs from the cycle space");
  return rep;
}

NaturalityReport verify_transposition_rows(const SignedEulerSystem& c, const VertexId& v,
                                           const VertexId& w, const CircuitPartition& p) {
  NaturalityReport rep;
  auto note = [&rep](const std::string& what) {
    rep.ok = false;
    rep.violations.push_back(what);
  };
  if (!orientation_consistent(c, p))
    throw Error("row identities require an orientation-consistent partition");

  // The identities assume the occurrence between v- and v+ is w-; flipping
  // w's signs costs nothing (labels and the rewrite ignore signs) and makes
  // the exchanged system come out with the signing the identities refer to.
  SignedEulerSystem base = c.signed_interlacement_entry(v, w) == 1 ? c.flipped(w) : c;
  if (base.signed_interlacement_entry(v, w) != -1)
    throw Error("row identities require an interlaced pair");
  SignedEulerSystem rewritten = transposition(base, v, w);

  IntMatrix a = standard_form(base, p);
  IntMatrix b = standard_form(rewritten, p);
  IntMatrix s = signed_interlacement(base);
  int vi = a.row_index(v), wi = a.row_index(w);
  for (int x = 0; x < a.rows(); ++x) {
    for (int j = 0; j < a.cols(); ++j) {
      Int expected;
      if (x == vi) expected = a.at(wi, j);
      else if (x == wi) expected = -a.at(vi, j);
      else expected = a.at(x, j) + s.at(x, wi) * a.at(vi, j) - s.at(x, vi) * a.at(wi, j);
      if (b.at(x, j) != expected) {
        note("row identity fails at (" + a.row_ids()[x] + ", " + a.col_ids()[j] + ")");
        break;
      }
    }
  }
  return rep;
}

bool orientation_consistent(const SignedEulerSystem& c, const CircuitPartition& p) {
  for (const auto& [v, label] : label_transitions(c, p))
    if (label == TransitionLabel::psi) return false;
  return true;
}

ReachabilityResult kappa_reachability(const SignedEulerSystem& c, const SignedEulerSystem& c_prime) {
  if (c.graph_ptr() != c_prime.graph_ptr())
    throw Error("reachability needs two systems of one shared graph");

  ReachabilityResult result;
  const auto& vertices = c.graph().sorted_vertices();

  // Breadth-first search, remembering how each state was produced.
  struct Visit {
    int parent = -1;
    ReachabilityResult::KappaStep step;
  };
  {
    std::vector<SignedEulerSystem> states{c};
    std::vector<Visit> visits{{}};
    std::map<std::vector<int>, int> seen{{c.canonical_trace_key(), 0}};
    auto target = c_prime.canonical_trace_key();
    int found = seen.count(target) ? 0 : -1;
    for (size_t i = 0; i < states.size() && found < 0; ++i) {
      for (const auto& v : vertices) {
        auto next = kappa_transform(states[i], v);
        for (int variant = 0; variant < 2 && found < 0; ++variant) {
          auto key = next[static_cast<size_t>(variant)].canonical_trace_key();
          if (seen.emplace(key, static_cast<int>(states.size())).second) {
            states.push_back(next[static_cast<size_t>(variant)]);
            visits.push_back({static_cast<int>(i), {v, variant}});
            if (key == target) found = static_cast<int>(states.size()) - 1;
          }
        }
        if (found >= 0) break;
      }
    }
    if (found < 0) throw Error("rewrite search exhausted without reaching the target");
    for (int at = found; at != 0; at = visits[static_cast<size_t>(at)].parent)
      result.kappa_steps.push_back(visits[static_cast<size_t>(at)].step);
    std::reverse(result.kappa_steps.begin(), result.kappa_steps.end());
  }

  if (c.same_edge_directions(c_prime)) {
    std::vector<SignedEulerSystem> states{c};
    struct TVisit {
      int parent = -1;
      std::pair<VertexId, VertexId> step;
    };
    std::vector<TVisit> visits{{}};
    std::map<std::vector<int>, int> seen{{c.canonical_trace_key(), 0}};
    auto target = c_prime.canonical_trace_key();
    int found = seen.count(target) ? 0 : -1;
    for (size_t i = 0; i < states.size() && found < 0; ++i) {
      for (size_t a = 0; a < vertices.size() && found < 0; ++a) {
        for (size_t b = a + 1; b < vertices.size() && found < 0; ++b) {
          if (!states[i].interlaced(vertices[a], vertices[b])) continue;
          auto next = transposition(states[i], vertices[a], vertices[b]);
          auto key = next.canonical_trace_key();
          if (seen.emplace(key, static_cast<int>(states.size())).second) {
            states.push_back(next);
            visits.push_back({static_cast<int>(i), {vertices[a], vertices[b]}});
            if (key == target) found = static_cast<int>(states.size()) - 1;
          }
        }
      }
    }
    if (found < 0) throw Error("exchange search exhausted without reaching the target");
    std::vector<std::pair<VertexId, VertexId>> steps;
    for (int at = found; at != 0; at = visits[static_cast<size_t>(at)].parent)
      steps.push_back(visits[static_cast<size_t>(at)].step);
    std::reverse(steps.begin(), steps.end());
    result.transposition_steps = std::move(steps);
  }
  return result;
}

}  // namespace quartic
