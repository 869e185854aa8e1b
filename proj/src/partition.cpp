#include "quartic/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace quartic {

Transition::Transition(std::array<int, 2> a, std::array<int, 2> b) : a_(a), b_(b) {
  std::sort(a_.begin(), a_.end());
  std::sort(b_.begin(), b_.end());
  if (b_[0] < a_[0]) std::swap(a_, b_);
  std::set<int> all{a_[0], a_[1], b_[0], b_[1]};
  if (all.size() != 4) throw Error("transition pairs are not disjoint");
}

int Transition::partner(int h) const {
  if (h == a_[0]) return a_[1];
  if (h == a_[1]) return a_[0];
  if (h == b_[0]) return b_[1];
  if (h == b_[1]) return b_[0];
  throw Error("half-edge " + std::to_string(h) + " is not in the transition");
}

bool Transition::contains(int h) const {
  return h == a_[0] || h == a_[1] || h == b_[0] || h == b_[1];
}

int Transition::side_of(int h) const {
  if (h == a_[0] || h == a_[1]) return 0;
  if (h == b_[0] || h == b_[1]) return 1;
  throw Error("half-edge " + std::to_string(h) + " is not in the transition");
}

Transition transition_from_label(const SignedEulerSystem& c, const VertexId& v,
                                 TransitionLabel label) {
  const auto& p = c.passages(v);
  switch (label) {
    case TransitionLabel::phi:
      return Transition({p.enter_plus, p.leave_plus}, {p.enter_minus, p.leave_minus});
    case TransitionLabel::chi:
      return Transition({p.enter_plus, p.leave_minus}, {p.leave_plus, p.enter_minus});
    default:  // psi
      return Transition({p.enter_plus, p.enter_minus}, {p.leave_plus, p.leave_minus});
  }
}

LabelMap label_transitions(const SignedEulerSystem& c, const TransitionMap& t) {
  LabelMap out;
  for (const auto& [v, tr] : t) {
    bool found = false;
    for (auto l : {TransitionLabel::phi, TransitionLabel::chi, TransitionLabel::psi})
      if (transition_from_label(c, v, l) == tr) {
        out.emplace(v, l);
        found = true;
        break;
      }
    if (!found) throw Error("transition at '" + v + "' does not belong to the graph");
  }
  return out;
}

LabelMap label_transitions(const SignedEulerSystem& c, const CircuitPartition& p) {
  return label_transitions(c, p.transitions());
}

CircuitPartition::CircuitPartition(std::shared_ptr<const FourRegularGraph> graph,
                                   TransitionMap transitions)
    : graph_(std::move(graph)), transitions_(std::move(transitions)) {
  if (!graph_) throw Error("circuit partition needs a graph");
  for (const auto& v : graph_->vertices()) {
    auto it = transitions_.find(v);
    if (it == transitions_.end()) throw Error("no transition given at vertex '" + v + "'");
    const auto& inc = graph_->incident(v);
    for (int h : {it->second.first_pair()[0], it->second.first_pair()[1],
                  it->second.second_pair()[0], it->second.second_pair()[1]})
      if (std::find(inc.begin(), inc.end(), h) == inc.end())
        throw Error("transition at '" + v + "' uses half-edge " + std::to_string(h) +
                    " which is not incident");
  }
  if (transitions_.size() != static_cast<size_t>(graph_->vertex_count()))
    throw Error("transition map names a vertex outside the graph");

  // Trace circuits: repeatedly depart the least unvisited half-edge and
  // follow mate / transition-partner until the start recurs.
  int H = graph_->half_edge_count();
  circuit_of_.assign(H, -1);
  std::vector<bool> seen(H, false);
  for (int h = 0; h < H; ++h) {
    if (seen[h]) continue;
    Circuit circ;
    int idx = static_cast<int>(circuits_.size());
    int cur = h;
    do {
      int arr = graph_->mate(cur);
      seen[cur] = seen[arr] = true;
      circuit_of_[cur] = circuit_of_[arr] = idx;
      circ.trace.push_back(cur);
      circ.trace.push_back(arr);
      cur = transitions_.at(graph_->vertex_of(arr)).partner(arr);
    } while (cur != h);
    circuits_.push_back(std::move(circ));
  }
}

const Transition& CircuitPartition::transition(const VertexId& v) const {
  auto it = transitions_.find(v);
  if (it == transitions_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

CircuitPartition partition_of(const SignedEulerSystem& c) {
  LabelMap all_phi;
  for (const auto& v : c.graph().vertices()) all_phi.emplace(v, TransitionLabel::phi);
  return partition_from_labels(c, all_phi);
}

CircuitPartition partition_from_labels(const SignedEulerSystem& c, const LabelMap& labels) {
  TransitionMap t;
  for (const auto& [v, l] : labels) t.emplace(v, transition_from_label(c, v, l));
  return CircuitPartition(c.graph_ptr(), std::move(t));
}

CircuitPartition partition_induced_by(const SignedEulerSystem& system) {
  TransitionMap t;
  for (const auto& v : system.graph().vertices()) {
    const auto& p = system.passages(v);
    t.emplace(v, Transition({p.enter_plus, p.leave_plus}, {p.enter_minus, p.leave_minus}));
  }
  return CircuitPartition(system.graph_ptr(), std::move(t));
}

std::uint64_t partition_count(const SignedEulerSystem& c) {
  std::uint64_t n = 1;
  for (int i = 0; i < c.graph().vertex_count(); ++i) n *= 3;
  return n;
}

LabelMap label_assignment_at(const SignedEulerSystem& c, std::uint64_t index) {
  const auto& vs = c.graph().sorted_vertices();
  LabelMap out;
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
    out.emplace(*it, static_cast<TransitionLabel>(index % 3));
    index /= 3;
  }
  if (index != 0) throw Error("partition index out of range");
  return out;
}

CircuitPartition partition_at(const SignedEulerSystem& c, std::uint64_t index) {
  return partition_from_labels(c, label_assignment_at(c, index));
}

CircuitPartition parse_partition(std::string_view text, const SignedEulerSystem& c) {
  struct Line {
    int number = 0;
    std::vector<std::string> toks;
  };
  std::vector<Line> lines;
  std::istringstream stream{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(stream, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string t; ls >> t;) line.toks.push_back(t);
    if (!line.toks.empty()) lines.push_back(std::move(line));
  }
  if (lines.empty()) throw Error("no partition data in input");

  if (lines.front().toks[0] == "dow")
    return partition_induced_by(realize_in_graph(c.graph_ptr(), text));

  const std::string form = lines.front().toks[0];
  TransitionMap transitions;
  for (const auto& [lineno, toks] : lines) {
    const std::string at = "line " + std::to_string(lineno) + ": ";
    if (toks[0] != form)
      throw ParseError(lineno, toks[0],
                       at + "cannot mix '" + form + "' and '" + toks[0] + "' lines");
    if (form != "label" && form != "tr")
      throw ParseError(lineno, form, at + "unknown directive '" + form + "'");
    if (toks.size() < 2)
      throw ParseError(lineno, toks[0], at + form + " line needs a vertex id");

    size_t first = 2;
    std::string v = toks[1];
    if (!v.empty() && v.back() == ':') {
      v.pop_back();
    } else if (toks.size() > 2 && toks[2] == ":") {
      first = 3;
    } else {
      throw ParseError(lineno, toks[1], at + "expected ':' after the vertex id");
    }
    if (v.empty()) throw ParseError(lineno, toks[1], at + "empty vertex id");
    if (!c.graph().has_vertex(v))
      throw ParseError(lineno, v, at + "unknown vertex '" + v + "'");
    if (transitions.count(v))
      throw ParseError(lineno, v, at + "vertex '" + v + "' assigned twice");

    if (form == "label") {
      if (toks.size() != first + 1)
        throw ParseError(lineno, toks[0], at + "label line needs exactly one label");
      const std::string& name = toks[first];
      TransitionLabel label;
      if (name == "phi") label = TransitionLabel::phi;
      else if (name == "chi") label = TransitionLabel::chi;
      else if (name == "psi") label = TransitionLabel::psi;
      else throw ParseError(lineno, name, at + "unknown label '" + name + "'");
      transitions.emplace(v, transition_from_label(c, v, label));
    } else {
      if (toks.size() != first + 5 || toks[first + 2] != "|")
        throw ParseError(lineno, toks[0], at + "expected '<h> <h> | <h> <h>' after the vertex");
      auto half = [&](const std::string& t) {
        size_t used = 0;
        int h = -1;
        try {
          h = std::stoi(t, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != t.size() || h < 0)
          throw ParseError(lineno, t, at + "'" + t + "' is not a half-edge id");
        return h;
      };
      transitions.emplace(v, Transition({half(toks[first]), half(toks[first + 1])},
                                        {half(toks[first + 3]), half(toks[first + 4])}));
    }
  }
  return CircuitPartition(c.graph_ptr(), std::move(transitions));
}

TouchGraph::TouchGraph(CircuitPartition partition, const SignedEulerSystem& c)
    : partition_(std::move(partition)) {
  if (partition_.graph_ptr().get() != c.graph_ptr().get())
    throw Error("partition and euler system live on different graphs");
  const auto& g = partition_.graph();
  for (const auto& v : g.sorted_vertices()) {
    const auto& tr = partition_.transition(v);
    const auto& pass = c.passages(v);
    Edge e;
    e.f_vertex = v;
    int tail_side = tr.side_of(pass.enter_plus);
    e.tail_pair = tail_side == 0 ? tr.first_pair() : tr.second_pair();
    e.head_pair = tail_side == 0 ? tr.second_pair() : tr.first_pair();
    e.tail = partition_.circuit_of(e.tail_pair[0]);
    e.head = partition_.circuit_of(e.head_pair[0]);
    edge_index_.emplace(v, static_cast<int>(edges_.size()));
    edges_.push_back(std::move(e));
  }

  // Components of the touch-graph itself.
  int n = partition_.size();
  vertex_component_.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (vertex_component_[s] >= 0) continue;
    int idx = component_count_++;
    std::vector<int> queue{s};
    vertex_component_[s] = idx;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (const auto& e : edges_)
        for (int other : {e.tail == v ? e.head : -1, e.head == v ? e.tail : -1})
          if (other >= 0 && vertex_component_[other] < 0) {
            vertex_component_[other] = idx;
            queue.push_back(other);
          }
    }
  }
}

int TouchGraph::vertex_count() const { return partition_.size(); }

int TouchGraph::edge_index(const VertexId& v) const {
  auto it = edge_index_.find(v);
  if (it == edge_index_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

TouchGraph touch_graph(const CircuitPartition& p, const SignedEulerSystem& c) {
  return TouchGraph(p, c);
}

TouchWalk project_walk(const GraphWalk& walk, const TouchGraph& t) {
  TouchWalk out;
  const auto& g = t.partition().graph();
  size_t k = walk.steps.size();
  for (size_t i = 0; i < k; ++i) {
    int arr = walk.steps[i].second;
    int dep = walk.steps[(i + 1) % k].first;
    const VertexId& v = g.vertex_of(arr);
    if (g.vertex_of(dep) != v) throw Error("walk is not closed at vertex '" + v + "'");
    if (dep == arr) throw Error("walk reverses on a half-edge at '" + v + "'");
    const auto& tr = t.partition().transition(v);
    if (tr.partner(arr) == dep) continue;  // follows the partition: contracted away
    int e = t.edge_index(v);
    const auto& tail = t.edge(e).tail_pair;
    bool fwd = tail[0] == arr || tail[1] == arr;
    out.steps.push_back({e, fwd});
  }
  return out;
}

GraphWalk component_walk(const SignedEulerSystem& c, int component) {
  const auto& comp = c.components().at(component);
  GraphWalk w;
  for (int i = 0; i < comp.length(); ++i)
    w.steps.emplace_back(comp.trace[2 * i], comp.trace[2 * i + 1]);
  return w;
}

std::pair<GraphWalk, GraphWalk> fundamental_circuits(const SignedEulerSystem& c,
                                                     const VertexId& v) {
  const auto& p = c.passages(v);
  const auto& comp = c.components().at(p.component);
  int n = comp.length();
  GraphWalk first, second;
  for (int k = p.minus_pos; k != p.plus_pos; k = (k + 1) % n)
    first.steps.emplace_back(comp.trace[2 * k], comp.trace[2 * k + 1]);
  for (int k = p.plus_pos; k != p.minus_pos; k = (k + 1) % n)
    second.steps.emplace_back(comp.trace[2 * k], comp.trace[2 * k + 1]);
  return {first, second};
}

CorrespondenceReport components_correspondence(const CircuitPartition& p,
                                               const SignedEulerSystem& c) {
  CorrespondenceReport report;
  const auto& g = p.graph();
  auto fail = [&](std::string m) {
    report.ok = false;
    report.failures.push_back(std::move(m));
  };

  std::vector<std::set<int>> hosts(g.component_count());
  for (size_t i = 0; i < p.circuits().size(); ++i) {
    const auto& circ = p.circuits()[i];
    std::set<int> touched;
    for (int h : circ.trace) touched.insert(g.component_of(g.vertex_of(h)));
    if (touched.size() != 1)
      fail("circuit " + std::to_string(i) + " crosses graph components");
    hosts[*touched.begin()].insert(static_cast<int>(i));
  }
  for (int k = 0; k < g.component_count(); ++k)
    if (hosts[k].empty()) fail("graph component " + std::to_string(k) + " hosts no circuit");

  TouchGraph t(p, c);
  if (t.component_count() != g.component_count())
    fail("touch-graph has " + std::to_string(t.component_count()) +
         " components, graph has " + std::to_string(g.component_count()));
  // Circuits of one graph component must form one touch-graph component.
  for (int k = 0; k < g.component_count(); ++k) {
    std::set<int> tcomps;
    for (int ci : hosts[k]) tcomps.insert(t.vertex_component().at(ci));
    if (tcomps.size() > 1)
      fail("circuits of graph component " + std::to_string(k) +
           " span several touch-graph components");
  }
  return report;
}

}  // namespace quartic
