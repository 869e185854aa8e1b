// Counting Euler systems by determinant, with brute-force oracles and the
// determinant equivalences that make the count work.
//
// Among the 2^n partitions that follow or cross a reference system at every
// vertex, the ones with a single circuit per component are exactly the Euler
// systems inducing the same edge directions; each contributes 1 to
// det(I + s), where s is the signed interlacement matrix.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quartic/matrix.hpp"
#include "quartic/partition.hpp"

namespace quartic {

// Number of Euler systems inducing the same edge directions as c, computed
// as det(I + s) with s the signed interlacement matrix of c.
Int count_euler_det(const SignedEulerSystem& c);

// The same number by enumeration: sweep all 2^n follow/cross label
// assignments and count the partitions with one circuit per component.
// Refuses graphs with more than 20 vertices.
Int count_euler_brute(const SignedEulerSystem& c);

struct DetzeroReport {
  bool ok = true;
  bool is_euler = false;
  Int det;          // det of the full integer matrix of (c, p)
  Int reduced_det;  // det of its principal submatrix on the crossing vertices
  std::vector<std::string> violations;
};

// For an orientation-consistent partition (throws otherwise), checks the
// five-way equivalence: p is an Euler system <=> det = 1 <=> det != 0, and
// the same with the reduced determinant; both determinants always lie in
// {0, 1} and agree.
DetzeroReport verify_detzero(const SignedEulerSystem& c, const CircuitPartition& p);

// det(X + s) where X is the diagonal matrix of the assignment (every vertex
// must be assigned). As a polynomial in the assignment this expands to
// sum over vertex subsets S of (product of the S values) * det of the integer
// matrix of the follow-on-S/cross-elsewhere partition; at the all-ones
// assignment it collapses to count_euler_det.
Rat indicator_polynomial(const SignedEulerSystem& c, const std::map<VertexId, Rat>& assignment);

struct CensusReport {
  // Circuit count |P| -> number of partitions among all 3^n.
  std::map<int, std::uint64_t> by_circuits;
  std::uint64_t total = 0;
  bool ok = true;  // every partition satisfied the nullity formula
  std::vector<std::string> violations;
};

// Sweeps all 3^n partitions, tabulating circuit counts and checking the
// nullity formula nullity(reduced GF(2) matrix) = |P| - c on each. Splits the
// index range over workers (QUARTIC_WORKERS, default 1) and merges worker
// results in order, so output is deterministic. Graphs with more than
// max_vertices vertices are refused.
CensusReport partition_census(const SignedEulerSystem& c, int max_vertices = 10);

}  // namespace quartic
