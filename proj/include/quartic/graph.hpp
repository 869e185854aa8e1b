// Half-edge representation of 4-regular multigraphs and signed Euler systems.
//
// A graph is stored as a set of half-edges paired by mate(); every vertex is
// incident to exactly four half-edges, so loops and parallel edges are fine.
// An Euler system is one Euler circuit per connected component, recorded both
// as a signed double occurrence word (each vertex once with '+', once with
// '-') and as the half-edge trace that realizes the word in the graph.
#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quartic {

using VertexId = std::string;

// Input/precondition failures throw Error; parse errors carry a location.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, std::string token, const std::string& message)
      : Error(message), line_(line), token_(std::move(token)) {}
  int line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  int line_;
  std::string token_;
};

struct HalfEdge {
  int id = -1;
  VertexId vertex;
  int mate = -1;
};

// Immutable 4-regular multigraph. Half-edge ids are assigned in construction
// order: edge k owns half-edges 2k and 2k+1.
class FourRegularGraph {
 public:
  explicit FourRegularGraph(std::vector<std::pair<VertexId, VertexId>> edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(half_edges_.size() / 2); }
  int half_edge_count() const { return static_cast<int>(half_edges_.size()); }

  // Vertices in first-appearance order; sorted_vertices() is the canonical
  // index order used by every matrix built over this graph.
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<VertexId>& sorted_vertices() const { return sorted_; }

  const HalfEdge& half_edge(int h) const { return half_edges_.at(h); }
  const VertexId& vertex_of(int h) const { return half_edges_.at(h).vertex; }
  int mate(int h) const { return half_edges_.at(h).mate; }
  std::pair<VertexId, VertexId> edge_endpoints(int edge) const;

  bool has_vertex(const VertexId& v) const { return incidence_.count(v) != 0; }
  // The four half-edges at v, ascending by id.
  const std::array<int, 4>& incident(const VertexId& v) const;

  // Connected components, each sorted by vertex id, ordered by least vertex.
  const std::vector<std::vector<VertexId>>& components() const { return components_; }
  int component_count() const { return static_cast<int>(components_.size()); }
  int component_of(const VertexId& v) const;

 private:
  std::vector<HalfEdge> half_edges_;
  std::vector<VertexId> vertices_;
  std::vector<VertexId> sorted_;
  std::map<VertexId, std::array<int, 4>> incidence_;
  std::vector<std::vector<VertexId>> components_;
  std::map<VertexId, int> component_index_;
};

enum class Sign : unsigned char { plus, minus };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

struct SignedOccurrence {
  VertexId vertex;
  Sign sign = Sign::plus;

  bool operator==(const SignedOccurrence&) const = default;
  // '+' sorts before '-' so canonical rotations prefer positive entries.
  auto operator<=>(const SignedOccurrence& o) const {
    if (auto c = vertex <=> o.vertex; c != 0) return c;
    return static_cast<int>(sign) <=> static_cast<int>(o.sign);
  }
};

// One closed component of an Euler system. word[i] is the i-th vertex visit;
// step i runs from word[i] to word[(i+1) % n] departing along half-edge
// trace[2i] and arriving along trace[2i+1].
struct EulerComponent {
  std::string name;
  std::vector<SignedOccurrence> word;
  std::vector<int> trace;

  int length() const { return static_cast<int>(word.size()); }
  bool operator==(const EulerComponent& o) const { return word == o.word && trace == o.trace; }
};

// Rotate a cyclic word to its lexicographically least rotation.
std::vector<SignedOccurrence> canonical_rotation(std::vector<SignedOccurrence> word);

// An Euler system of a 4-regular multigraph with a sign designation: every
// vertex carries one '+' and one '-' occurrence. Components are stored in
// canonical rotation and ordered by least vertex id; construction validates
// the trace against the graph.
class SignedEulerSystem {
 public:
  SignedEulerSystem(std::shared_ptr<const FourRegularGraph> graph,
                    std::vector<EulerComponent> components);

  const FourRegularGraph& graph() const { return *graph_; }
  const std::shared_ptr<const FourRegularGraph>& graph_ptr() const { return graph_; }
  const std::vector<EulerComponent>& components() const { return components_; }
  const EulerComponent& component(int i) const { return components_.at(i); }
  int component_index_of(const VertexId& v) const;

  // The four half-edges of the two passages through v, in the orientation of
  // the stored traversal. "enter_plus" arrives at the '+' occurrence, etc.
  struct Passages {
    int component = -1;
    int plus_pos = -1;   // index of the '+' occurrence in the component word
    int minus_pos = -1;  // index of the '-' occurrence
    int enter_plus = -1, leave_plus = -1;   // h1, h2 in matrix conventions
    int enter_minus = -1, leave_minus = -1; // h3, h4
  };
  const Passages& passages(const VertexId& v) const;

  // Number of w-occurrences strictly between the '-' and '+' occurrences of v
  // (following the traversal). 0, 1 or 2; v and w must share a component.
  int occurrences_between(const VertexId& v, const VertexId& w) const;
  // True when the word reads v..w..v..w (one w-occurrence on each side of v).
  bool interlaced(const VertexId& v, const VertexId& w) const;
  // +1 when the occurrence between v- and v+ is w+, -1 when it is w-, else 0.
  int signed_interlacement_entry(const VertexId& v, const VertexId& w) const;

  // Same system with the two signs of v exchanged.
  SignedEulerSystem flipped(const VertexId& v) const;

  // True when both systems traverse every edge in the same direction, i.e.
  // the same half-edge of each mate pair is the departing one.
  bool same_edge_directions(const SignedEulerSystem& other) const;

  // Equal graphs (by identity), equal canonical words and traces.
  bool operator==(const SignedEulerSystem& o) const;

  // Sign-free key identifying the underlying Euler system; used as a
  // visited-set key when searching transform orbits.
  std::vector<int> canonical_trace_key() const;

 private:
  std::shared_ptr<const FourRegularGraph> graph_;
  std::vector<EulerComponent> components_;
  std::map<VertexId, Passages> passages_;
};

// Result of parsing a graph description. DOW input also fixes an Euler
// system; edge-list input leaves it empty.
struct ParsedGraph {
  std::shared_ptr<const FourRegularGraph> graph;
  std::optional<SignedEulerSystem> euler;
};

// Accepts either one or more "dow <name>: tok tok ..." lines (tok is a vertex
// id with optional trailing '+'/'-') or a block of "edge v w" lines. '#'
// starts a comment. Unsigned occurrences default to '+' first, '-' second.
ParsedGraph parse_graph(std::string_view text);

// Canonical text form: one "dow <name>: ..." line per component, explicit
// signs, components in stored order.
std::string serialize(const SignedEulerSystem& system);

// Deterministic Euler system of g: Hierholzer's algorithm, always taking the
// least unused half-edge id, one circuit per component, '+' on each vertex's
// first emitted occurrence.
SignedEulerSystem euler_system(std::shared_ptr<const FourRegularGraph> g);

// Realize the given signed words as an Euler system of g (least-half-edge-id
// backtracking; first consistent assignment wins). Throws Error when the
// words do not describe an Euler system of g.
SignedEulerSystem realize_in_graph(std::shared_ptr<const FourRegularGraph> g,
                                   const std::vector<EulerComponent>& words);

// Convenience for fixtures/tests: parse words only, realize on an existing
// graph.
SignedEulerSystem realize_in_graph(std::shared_ptr<const FourRegularGraph> g,
                                   std::string_view dow_text);

}  // namespace quartic
