// Cycle and cocycle spaces of touch-graphs.
//
// A touch-graph carries the edge directions induced by the reference system's
// signing, so walk tallies, vertex cocycles and fundamental-cycle bases are
// all integer vectors indexed by the touch edges (equivalently, by the base
// graph's vertices). The verification harnesses tie the interlacement
// matrices to these spaces: the standard form's rows must span exactly the
// cycle space of the touch-graph, with the nullity predicted by the circuit
// count.
#pragma once

#include <string>
#include <vector>

#include "quartic/matrix.hpp"
#include "quartic/partition.hpp"

namespace quartic {

// Signed traversal tally of a closed walk: +1 each time an edge is crossed
// tail-to-head, -1 head-to-tail. Coordinates follow t.edges() order (sorted
// base-vertex order).
std::vector<Int> walk_tally(const TouchWalk& walk, const TouchGraph& t);

// The cocycle vector of one touch-graph vertex (circuit): +1 on non-loop
// edges leaving it, -1 on non-loop edges entering it, 0 elsewhere.
std::vector<Int> vertex_cocycle(int circuit, const TouchGraph& t);

// Edge-by-circuit matrix whose columns are the vertex cocycles. Rows are
// named by base vertex (one per touch edge), columns "g0", "g1", ... by
// circuit index.
IntMatrix cocycle_matrix(const TouchGraph& t);

// Fundamental cycles of a breadth-first spanning forest: one row per
// non-forest edge (loops included), |E| - |V| + c rows, ids "z0", "z1", ...
// The forest is grown from the least circuit index, scanning incident edges
// in ascending index order, so the basis is deterministic.
IntMatrix cycle_basis(const TouchGraph& t);

struct DualityReport {
  bool ok = true;
  int rank_cycle = 0, rank_cocycle = 0;
  int expected_rank_cycle = 0, expected_rank_cocycle = 0;
  std::vector<std::string> violations;
};

// Checks Z * U = 0, rank U = |V| - c and rank Z = |E| - |V| + c on the
// touch-graph, with Z = cycle_basis and U = cocycle_matrix.
DualityReport verify_duality(const TouchGraph& t);

struct MainTheoremReport {
  bool ok = true;
  bool construction_match = false;  // case-table rows == traced rows
  bool mod2_match = false;          // integer matrix reduces to the GF(2) one
  bool product_zero = false;        // standard form annihilates the cocycles
  bool rational_row_space = false;  // row space == cycle space over the rationals
  bool gf2_row_space = false;       // mod-2 row space == mod-2 cycle space
  int rational_nullity = -1;
  int gf2_nullity = -1;
  int reduced_gf2_nullity = -1;
  int expected_nullity = -1;  // |P| - c(F)
  std::vector<std::string> violations;
};

// Full verification for one (system, partition) pair: both construction
// routes agree, the integer matrix reduces mod 2 to the modified
// interlacement matrix, its rows are orthogonal to every vertex cocycle of
// the touch-graph, its row space equals the touch-graph cycle space over the
// rationals (and mod 2), and all three nullities equal |P| - c(F).
MainTheoremReport verify_main_theorem(const SignedEulerSystem& c, const CircuitPartition& p);

}  // namespace quartic
