// Circuit partitions of a 4-regular multigraph and their touch-graphs.
//
// A transition at a vertex splits its four half-edges into two pairs; a full
// assignment of transitions partitions the edge set into closed circuits.
// Relative to an Euler system C, every transition at v is one of three:
// phi follows C, chi crosses it, psi follows-and-reverses.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "quartic/graph.hpp"

namespace quartic {

enum class TransitionLabel : unsigned char { phi, chi, psi };

inline const char* label_name(TransitionLabel l) {
  switch (l) {
    case TransitionLabel::phi: return "phi";
    case TransitionLabel::chi: return "chi";
    default: return "psi";
  }
}

// Two disjoint half-edge pairs at one vertex, stored normalized: the pair
// holding the least id first, each pair ascending.
class Transition {
 public:
  Transition(std::array<int, 2> a, std::array<int, 2> b);

  const std::array<int, 2>& first_pair() const { return a_; }
  const std::array<int, 2>& second_pair() const { return b_; }
  int partner(int h) const;
  bool contains(int h) const;
  // The pair h belongs to (0 or 1); throws when h is not present.
  int side_of(int h) const;

  bool operator==(const Transition&) const = default;

 private:
  std::array<int, 2> a_, b_;
};

using TransitionMap = std::map<VertexId, Transition>;
using LabelMap = std::map<VertexId, TransitionLabel>;

// The transition at v that C labels phi/chi/psi.
Transition transition_from_label(const SignedEulerSystem& c, const VertexId& v,
                                 TransitionLabel label);

// Label every transition of p relative to c (always possible: the three
// labels exhaust the pairings of four half-edges).
LabelMap label_transitions(const SignedEulerSystem& c, const TransitionMap& t);
class CircuitPartition;
LabelMap label_transitions(const SignedEulerSystem& c, const CircuitPartition& p);

// A circuit partition: one transition per vertex, traced into closed trails.
// Circuits are ordered by least contained half-edge id and traversed starting
// from it; step i of a circuit departs trace[2i] and arrives trace[2i+1].
class CircuitPartition {
 public:
  CircuitPartition(std::shared_ptr<const FourRegularGraph> graph, TransitionMap transitions);

  struct Circuit {
    std::vector<int> trace;
    int length() const { return static_cast<int>(trace.size() / 2); }
  };

  const FourRegularGraph& graph() const { return *graph_; }
  const std::shared_ptr<const FourRegularGraph>& graph_ptr() const { return graph_; }
  const TransitionMap& transitions() const { return transitions_; }
  const Transition& transition(const VertexId& v) const;
  const std::vector<Circuit>& circuits() const { return circuits_; }
  int size() const { return static_cast<int>(circuits_.size()); }
  int circuit_of(int half_edge) const { return circuit_of_.at(half_edge); }

 private:
  std::shared_ptr<const FourRegularGraph> graph_;
  TransitionMap transitions_;
  std::vector<Circuit> circuits_;
  std::vector<int> circuit_of_;
};

// The partition whose circuits are exactly c's components (phi everywhere).
CircuitPartition partition_of(const SignedEulerSystem& c);
// Partition built from per-vertex labels relative to c (every vertex needed).
CircuitPartition partition_from_labels(const SignedEulerSystem& c, const LabelMap& labels);
// The partition induced by another Euler system of the same graph.
CircuitPartition partition_induced_by(const SignedEulerSystem& system);

// Lexicographic enumeration of all 3^n circuit partitions: vertices sorted,
// label order phi < chi < psi, first vertex most significant.
std::uint64_t partition_count(const SignedEulerSystem& c);
LabelMap label_assignment_at(const SignedEulerSystem& c, std::uint64_t index);
CircuitPartition partition_at(const SignedEulerSystem& c, std::uint64_t index);

// Parse a partition description relative to c. Three self-announcing line
// forms ('#' starts a comment, forms cannot be mixed):
//   label <vertex>: phi|chi|psi          one line per vertex
//   tr <vertex>: <h> <h> | <h> <h>       explicit half-edge pairs
//   dow <name>: ...                      another Euler system, realized on
//                                        c's graph and taken as a partition
CircuitPartition parse_partition(std::string_view text, const SignedEulerSystem& c);

// Touch-graph of a partition: one vertex per circuit, one edge e_v per vertex
// v of the base graph, joining the circuits whose passages meet at v. The
// direction of e_v comes from the reference system: its tail pair is the one
// containing the half-edge entering v's '+' occurrence.
class TouchGraph {
 public:
  TouchGraph(CircuitPartition partition, const SignedEulerSystem& c);

  struct Edge {
    VertexId f_vertex;
    int tail = -1, head = -1;
    std::array<int, 2> tail_pair{}, head_pair{};
    bool loop() const { return tail == head; }
  };

  int vertex_count() const;
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(i); }
  // Edge index of e_v; edges are sorted by their base-graph vertex id.
  int edge_index(const VertexId& v) const;
  const CircuitPartition& partition() const { return partition_; }

  int component_count() const { return component_count_; }
  // Component index per touch-graph vertex (circuit).
  const std::vector<int>& vertex_component() const { return vertex_component_; }

 private:
  CircuitPartition partition_;
  std::vector<Edge> edges_;
  std::map<VertexId, int> edge_index_;
  std::vector<int> vertex_component_;
  int component_count_ = 0;
};

TouchGraph touch_graph(const CircuitPartition& p, const SignedEulerSystem& c);

// A closed walk in the base graph: step i departs steps[i].first and arrives
// steps[i].second; consecutive steps meet at a common vertex.
struct GraphWalk {
  std::vector<std::pair<int, int>> steps;
};

// A closed walk in a touch-graph; forward means the traversal departs the
// edge's tail pair.
struct TouchStep {
  int edge = -1;
  bool forward = true;
  bool operator==(const TouchStep&) const = default;
};
struct TouchWalk {
  std::vector<TouchStep> steps;
};

// Image of a closed walk under the contraction of circuits to points:
// passages that follow the partition's transition disappear, all others
// traverse the touch-edge of their vertex. The result may be empty. Walks
// that depart along their arriving half-edge are rejected.
TouchWalk project_walk(const GraphWalk& walk, const TouchGraph& t);

// The circuits of c's components, as walks (one per component).
GraphWalk component_walk(const SignedEulerSystem& c, int component);
// The two fundamental closed trails of c at v: the first runs from the '-'
// occurrence to the '+' occurrence (closing through v), the second is the
// complementary trail.
std::pair<GraphWalk, GraphWalk> fundamental_circuits(const SignedEulerSystem& c,
                                                     const VertexId& v);

struct CorrespondenceReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Each circuit of p must stay inside one component of the base graph, every
// component must host at least one circuit, and the touch-graph must have
// exactly one component per base component.
CorrespondenceReport components_correspondence(const CircuitPartition& p,
                                               const SignedEulerSystem& c);

}  // namespace quartic
