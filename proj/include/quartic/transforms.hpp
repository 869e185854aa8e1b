// Rewrites of Euler systems and their matrix naturality properties.
//
// Two rewrites generate everything: reversing one of the two closed trails
// through a vertex (two variants per vertex), and exchanging the two
// v-to-w trails of an interlaced pair (which preserves every edge direction).
// The verification harnesses check that the GF(2) and integer interlacement
// matrices transform by the predicted row operations, and breadth-first
// search over rewrite orbits connects any two Euler systems of a graph.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quartic/matrix.hpp"
#include "quartic/partition.hpp"

namespace quartic {

// The two systems obtained by reversing one fundamental closed trail at v:
// element 0 reverses the trail from the '-' occurrence to the '+' occurrence,
// element 1 the complementary trail. The two results are full reversals of
// each other's rewritten component.
std::array<SignedEulerSystem, 2> kappa_transform(const SignedEulerSystem& c, const VertexId& v);

// Exchange the two v-to-w trails. Requires v and w interlaced on c; signs
// travel with their occurrences, so when the occurrence between v- and v+ is
// w-, the result carries the standard signing used by the row-identity
// checks. Applying the same exchange twice returns the original system.
SignedEulerSystem transposition(const SignedEulerSystem& c, const VertexId& v, const VertexId& w);

struct NaturalityReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// GF(2) pair identities for two Euler systems of the same graph:
// M(C', P) = M(C', C) * M(C, P) and M(C, C') * M(C', C) = I.
NaturalityReport verify_gf2_naturality(const SignedEulerSystem& c, const SignedEulerSystem& c_prime,
                                       const CircuitPartition& p);

// For both rewrite variants at v: the GF(2) matrix of the rewritten system
// equals the original with row v added to every row interlaced with v, and
// the pair identities above hold for (c, rewritten).
NaturalityReport verify_kappa_naturality(const SignedEulerSystem& c, const VertexId& v,
                                         const CircuitPartition& p);

struct RealNaturalityReport {
  bool ok = true;
  Int det;  // det of the integer matrix of (c, c'-as-partition)
  std::vector<std::string> violations;
};

// Integer-matrix naturality for a pair of Euler systems: det M0(C, C') is
// odd; det * M0(C, C')^-1 is an integer matrix reducing mod 2 to M(C', C);
// and M0(C', C) * M0(C, P) reduces mod 2 to M(C', P) with rational row space
// equal to the cycle space of the touch-graph of p (directed by c's signing).
RealNaturalityReport verify_real_naturality(const SignedEulerSystem& c,
                                            const SignedEulerSystem& c_prime,
                                            const CircuitPartition& p);

// Row identities under the trail exchange at an interlaced pair (v, w), for a
// partition with no reversing transition: writing A / B for the integer
// matrices of the original and rewritten systems and s for the signed
// interlacement matrix of the original,
//   row_v(B) = row_w(A),  row_w(B) = -row_v(A),
//   row_x(B) = row_x(A) + s[x][w] * row_v(A) - s[x][v] * row_w(A)  otherwise.
// The check flips w's signs first when needed so the exchanged system carries
// the signing these identities require.
NaturalityReport verify_transposition_rows(const SignedEulerSystem& c, const VertexId& v,
                                           const VertexId& w, const CircuitPartition& p);

// True when the partition follows or crosses the system's orientation at
// every vertex (no reversing transition), i.e. both induce the same edge
// directions.
bool orientation_consistent(const SignedEulerSystem& c, const CircuitPartition& p);

struct ReachabilityResult {
  struct KappaStep {
    VertexId vertex;
    int variant = 0;  // 0 or 1, as in kappa_transform
  };
  // Rewrite sequence taking the first system to the second (empty when they
  // are already equal as unsigned systems).
  std::vector<KappaStep> kappa_steps;
  // Present when both systems respect the same edge directions: a sequence of
  // trail exchanges connecting them.
  std::optional<std::vector<std::pair<VertexId, VertexId>>> transposition_steps;
};

// Breadth-first search over rewrite orbits. Both systems must share one
// graph; a path always exists, so failure to find one throws.
ReachabilityResult kappa_reachability(const SignedEulerSystem& c, const SignedEulerSystem& c_prime);

}  // namespace quartic
