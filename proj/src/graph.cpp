#include "quartic/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace quartic {

FourRegularGraph::FourRegularGraph(std::vector<std::pair<VertexId, VertexId>> edges) {
  if (edges.empty()) throw Error("graph is empty");

  std::map<VertexId, std::vector<int>> slots;
  auto add_half = [&](const VertexId& v, int id, int mate) {
    if (!incidence_.count(v)) {
      vertices_.push_back(v);
      incidence_[v] = {-1, -1, -1, -1};
    }
    slots[v].push_back(id);
    half_edges_.push_back(HalfEdge{id, v, mate});
  };
  for (size_t k = 0; k < edges.size(); ++k) {
    int a = static_cast<int>(2 * k), b = a + 1;
    add_half(edges[k].first, a, b);
    add_half(edges[k].second, b, a);
  }

  for (auto& [v, ids] : slots) {
    if (ids.size() != 4)
      throw Error("vertex '" + v + "' has degree " + std::to_string(ids.size()) +
                  ", expected 4");
    std::sort(ids.begin(), ids.end());
    std::copy(ids.begin(), ids.end(), incidence_[v].begin());
  }

  sorted_ = vertices_;
  std::sort(sorted_.begin(), sorted_.end());

  // Components by BFS from each yet-unseen vertex, in sorted order, so the
  // component list is ordered by least vertex id.
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& [u, w] : edges) {
    adj[u].push_back(w);
    adj[w].push_back(u);
  }
  for (const auto& start : sorted_) {
    if (component_index_.count(start)) continue;
    int idx = static_cast<int>(components_.size());
    std::vector<VertexId> comp, queue{start};
    component_index_[start] = idx;
    while (!queue.empty()) {
      VertexId v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (const auto& w : adj[v])
        if (!component_index_.count(w)) {
          component_index_[w] = idx;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    components_.push_back(std::move(comp));
  }
}

std::pair<VertexId, VertexId> FourRegularGraph::edge_endpoints(int edge) const {
  return {vertex_of(2 * edge), vertex_of(2 * edge + 1)};
}

const std::array<int, 4>& FourRegularGraph::incident(const VertexId& v) const {
  auto it = incidence_.find(v);
  if (it == incidence_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

int FourRegularGraph::component_of(const VertexId& v) const {
  auto it = component_index_.find(v);
  if (it == component_index_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

std::vector<SignedOccurrence> canonical_rotation(std::vector<SignedOccurrence> word) {
  if (word.empty()) return word;
  size_t n = word.size(), best = 0;
  auto less_rot = [&](size_t a, size_t b) {
    for (size_t i = 0; i < n; ++i) {
      const auto& x = word[(a + i) % n];
      const auto& y = word[(b + i) % n];
      if (x != y) return x < y;
    }
    return false;
  };
  for (size_t r = 1; r < n; ++r)
    if (less_rot(r, best)) best = r;
  std::rotate(word.begin(), word.begin() + best, word.end());
  return word;
}

namespace {

// Rotate (word, trace) in lockstep to the word's canonical rotation.
void canonicalize_component(EulerComponent& c) {
  size_t n = c.word.size(), best = 0;
  auto less_rot = [&](size_t a, size_t b) {
    for (size_t i = 0; i < n; ++i) {
      const auto& x = c.word[(a + i) % n];
      const auto& y = c.word[(b + i) % n];
      if (x != y) return x < y;
    }
    return false;
  };
  for (size_t r = 1; r < n; ++r)
    if (less_rot(r, best)) best = r;
  std::rotate(c.word.begin(), c.word.begin() + best, c.word.end());
  std::rotate(c.trace.begin(), c.trace.begin() + 2 * best, c.trace.end());
}

}  // namespace

SignedEulerSystem::SignedEulerSystem(std::shared_ptr<const FourRegularGraph> graph,
                                     std::vector<EulerComponent> components)
    : graph_(std::move(graph)), components_(std::move(components)) {
  if (!graph_) throw Error("euler system needs a graph");

  std::vector<bool> used(graph_->half_edge_count(), false);
  std::map<VertexId, std::pair<int, int>> seen;  // vertex -> (plus count, minus count)

  for (auto& comp : components_) {
    int n = comp.length();
    if (n == 0) throw Error("empty component '" + comp.name + "'");
    if (static_cast<int>(comp.trace.size()) != 2 * n)
      throw Error("component '" + comp.name + "': trace length " +
                  std::to_string(comp.trace.size()) + " does not match word length " +
                  std::to_string(n));
    for (int i = 0; i < n; ++i) {
      int dep = comp.trace[2 * i], arr = comp.trace[2 * i + 1];
      if (dep < 0 || dep >= graph_->half_edge_count() || arr < 0 ||
          arr >= graph_->half_edge_count())
        throw Error("component '" + comp.name + "': trace id out of range");
      if (graph_->mate(dep) != arr)
        throw Error("component '" + comp.name + "': step " + std::to_string(i) +
                    " is not an edge");
      if (graph_->vertex_of(dep) != comp.word[i].vertex ||
          graph_->vertex_of(arr) != comp.word[(i + 1) % n].vertex)
        throw Error("component '" + comp.name + "': step " + std::to_string(i) +
                    " does not match the word");
      if (used[dep] || used[arr])
        throw Error("component '" + comp.name + "': edge of step " + std::to_string(i) +
                    " traversed twice");
      used[dep] = used[arr] = true;
      auto& cnt = seen[comp.word[i].vertex];
      (comp.word[i].sign == Sign::plus ? cnt.first : cnt.second) += 1;
    }
    canonicalize_component(comp);
  }

  for (int h = 0; h < graph_->half_edge_count(); ++h)
    if (!used[h])
      throw Error("edge at vertex '" + graph_->vertex_of(h) + "' is not traversed");
  for (const auto& [v, cnt] : seen)
    if (cnt.first != 1 || cnt.second != 1)
      throw Error("vertex '" + v + "' does not occur exactly once with each sign");

  std::sort(components_.begin(), components_.end(),
            [](const EulerComponent& a, const EulerComponent& b) {
              auto least = [](const EulerComponent& c) {
                VertexId m = c.word[0].vertex;
                for (const auto& o : c.word) m = std::min(m, o.vertex);
                return m;
              };
              return least(a) < least(b);
            });

  for (size_t ci = 0; ci < components_.size(); ++ci) {
    const auto& comp = components_[ci];
    int n = comp.length(), m = 2 * n;
    for (int i = 0; i < n; ++i) {
      auto& p = passages_[comp.word[i].vertex];
      p.component = static_cast<int>(ci);
      int enter = comp.trace[(2 * i - 1 + m) % m], leave = comp.trace[2 * i];
      if (comp.word[i].sign == Sign::plus) {
        p.plus_pos = i;
        p.enter_plus = enter;
        p.leave_plus = leave;
      } else {
        p.minus_pos = i;
        p.enter_minus = enter;
        p.leave_minus = leave;
      }
    }
  }
}

int SignedEulerSystem::component_index_of(const VertexId& v) const {
  return passages(v).component;
}

const SignedEulerSystem::Passages& SignedEulerSystem::passages(const VertexId& v) const {
  auto it = passages_.find(v);
  if (it == passages_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

int SignedEulerSystem::occurrences_between(const VertexId& v, const VertexId& w) const {
  const auto& pv = passages(v);
  const auto& pw = passages(w);
  if (pv.component != pw.component || v == w) return 0;
  const auto& word = components_[pv.component].word;
  int n = static_cast<int>(word.size()), count = 0;
  for (int k = (pv.minus_pos + 1) % n; k != pv.plus_pos; k = (k + 1) % n)
    if (word[k].vertex == w) ++count;
  return count;
}

bool SignedEulerSystem::interlaced(const VertexId& v, const VertexId& w) const {
  if (v == w) return false;
  const auto& pv = passages(v);
  const auto& pw = passages(w);
  if (pv.component != pw.component) return false;
  return occurrences_between(v, w) == 1;
}

int SignedEulerSystem::signed_interlacement_entry(const VertexId& v,
                                                  const VertexId& w) const {
  if (!interlaced(v, w)) return 0;
  const auto& pv = passages(v);
  const auto& word = components_[pv.component].word;
  int n = static_cast<int>(word.size());
  for (int k = (pv.minus_pos + 1) % n; k != pv.plus_pos; k = (k + 1) % n)
    if (word[k].vertex == w) return word[k].sign == Sign::plus ? 1 : -1;
  return 0;  // unreachable
}

SignedEulerSystem SignedEulerSystem::flipped(const VertexId& v) const {
  const auto& pv = passages(v);
  auto comps = components_;
  auto& word = comps[pv.component].word;
  word[pv.plus_pos].sign = Sign::minus;
  word[pv.minus_pos].sign = Sign::plus;
  return SignedEulerSystem(graph_, std::move(comps));
}

namespace {

// departs[h] is true when h is the departing half-edge of its mate pair.
std::vector<bool> departing_roles(const SignedEulerSystem& s) {
  std::vector<bool> dep(s.graph().half_edge_count(), false);
  for (const auto& c : s.components())
    for (size_t i = 0; i < c.trace.size(); i += 2) dep[c.trace[i]] = true;
  return dep;
}

}  // namespace

bool SignedEulerSystem::same_edge_directions(const SignedEulerSystem& other) const {
  if (graph_.get() != other.graph_.get()) return false;
  return departing_roles(*this) == departing_roles(other);
}

bool SignedEulerSystem::operator==(const SignedEulerSystem& o) const {
  return graph_.get() == o.graph_.get() && components_ == o.components_;
}

std::vector<int> SignedEulerSystem::canonical_trace_key() const {
  // Per component: least rotation over whole steps (pairs), so the
  // depart/arrive alignment is preserved. Signs do not enter.
  std::vector<std::vector<int>> keys;
  for (const auto& c : components_) {
    int n = c.length(), m = 2 * n;
    auto rot = [&](int r, int i) { return c.trace[(2 * r + i) % m]; };
    int best = 0;
    for (int r = 1; r < n; ++r) {
      for (int i = 0; i < m; ++i) {
        int x = rot(r, i), y = rot(best, i);
        if (x != y) {
          if (x < y) best = r;
          break;
        }
      }
    }
    std::vector<int> k(m);
    for (int i = 0; i < m; ++i) k[i] = rot(best, i);
    keys.push_back(std::move(k));
  }
  std::sort(keys.begin(), keys.end());
  std::vector<int> flat;
  for (const auto& k : keys) {
    flat.insert(flat.end(), k.begin(), k.end());
    flat.push_back(-1);
  }
  return flat;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct RawWord {
  std::string name;
  std::vector<SignedOccurrence> word;
  std::vector<bool> explicit_sign;
  int line = 0;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

// Fill in default signs: the first unsigned occurrence of a vertex is '+',
// the second the opposite of the first. Explicitly signed occurrences are
// kept and constrain the defaulting.
void apply_default_signs(RawWord& rw) {
  std::map<VertexId, std::vector<size_t>> pos;
  for (size_t i = 0; i < rw.word.size(); ++i) pos[rw.word[i].vertex].push_back(i);
  for (auto& [v, ps] : pos) {
    if (ps.size() != 2)
      throw ParseError(rw.line, v,
                       "line " + std::to_string(rw.line) + ": vertex '" + v +
                           "' occurs " + std::to_string(ps.size()) +
                           " times in component '" + rw.name + "', expected 2");
    bool e0 = rw.explicit_sign[ps[0]], e1 = rw.explicit_sign[ps[1]];
    if (e0 && e1) {
      if (rw.word[ps[0]].sign == rw.word[ps[1]].sign)
        throw ParseError(rw.line, v,
                         "line " + std::to_string(rw.line) + ": vertex '" + v +
                             "' carries the same sign twice");
    } else if (e0) {
      rw.word[ps[1]].sign = opposite(rw.word[ps[0]].sign);
    } else if (e1) {
      rw.word[ps[0]].sign = opposite(rw.word[ps[1]].sign);
    } else {
      rw.word[ps[0]].sign = Sign::plus;
      rw.word[ps[1]].sign = Sign::minus;
    }
  }
}

struct ParsedText {
  std::vector<RawWord> words;                          // dow form
  std::vector<std::pair<VertexId, VertexId>> edges;    // edge form
};

ParsedText parse_text(std::string_view text) {
  ParsedText out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "dow") {
      RawWord rw;
      rw.line = lineno;
      size_t first = 2;
      if (toks.size() < 2)
        throw ParseError(lineno, toks[0],
                         "line " + std::to_string(lineno) + ": dow line needs a name");
      std::string name = toks[1];
      if (!name.empty() && name.back() == ':') {
        name.pop_back();
      } else if (toks.size() > 2 && toks[2] == ":") {
        first = 3;
      } else {
        throw ParseError(lineno, toks[1],
                         "line " + std::to_string(lineno) +
                             ": expected ':' after the component name");
      }
      if (name.empty())
        throw ParseError(lineno, toks[1],
                         "line " + std::to_string(lineno) + ": empty component name");
      rw.name = name;
      for (size_t i = first; i < toks.size(); ++i) {
        std::string t = toks[i];
        SignedOccurrence occ;
        bool explicit_sign = false;
        if (t.back() == '+' || t.back() == '-') {
          occ.sign = t.back() == '+' ? Sign::plus : Sign::minus;
          explicit_sign = true;
          t.pop_back();
        }
        if (t.empty())
          throw ParseError(lineno, toks[i],
                           "line " + std::to_string(lineno) + ": token '" + toks[i] +
                               "' has no vertex id");
        occ.vertex = t;
        rw.word.push_back(std::move(occ));
        rw.explicit_sign.push_back(explicit_sign);
      }
      if (rw.word.empty())
        throw ParseError(lineno, rw.name,
                         "line " + std::to_string(lineno) + ": component '" + rw.name +
                             "' has no occurrences");
      out.words.push_back(std::move(rw));
    } else if (toks[0] == "edge") {
      if (toks.size() != 3)
        throw ParseError(lineno, toks[0],
                         "line " + std::to_string(lineno) +
                             ": edge line needs exactly two endpoints");
      out.edges.emplace_back(toks[1], toks[2]);
    } else {
      throw ParseError(lineno, toks[0],
                       "line " + std::to_string(lineno) + ": unknown directive '" +
                           toks[0] + "'");
    }
  }
  if (!out.words.empty() && !out.edges.empty())
    throw ParseError(0, "", "cannot mix dow and edge lines in one file");
  if (out.words.empty() && out.edges.empty()) throw Error("no graph data in input");
  return out;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  auto parsed = parse_text(text);
  ParsedGraph out;

  if (!parsed.edges.empty()) {
    out.graph = std::make_shared<FourRegularGraph>(parsed.edges);
    return out;
  }

  // DOW form: edges in word order; component k's step i becomes an edge, so
  // the induced Euler system has the identity trace.
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<EulerComponent> comps;
  std::set<std::string> names;
  std::map<VertexId, int> owner;
  int step = 0;
  for (auto& rw : parsed.words) {
    if (!names.insert(rw.name).second)
      throw ParseError(rw.line, rw.name,
                       "line " + std::to_string(rw.line) + ": duplicate component name '" +
                           rw.name + "'");
    apply_default_signs(rw);
    EulerComponent c;
    c.name = rw.name;
    c.word = rw.word;
    int n = static_cast<int>(rw.word.size());
    for (int i = 0; i < n; ++i) {
      const VertexId& v = rw.word[i].vertex;
      auto [it, fresh] = owner.emplace(v, rw.line);
      if (!fresh && it->second != rw.line)
        throw ParseError(rw.line, v,
                         "line " + std::to_string(rw.line) + ": vertex '" + v +
                             "' already used by another component");
      edges.emplace_back(v, rw.word[(i + 1) % n].vertex);
      c.trace.push_back(2 * step);
      c.trace.push_back(2 * step + 1);
      ++step;
    }
    comps.push_back(std::move(c));
  }
  out.graph = std::make_shared<FourRegularGraph>(edges);
  out.euler.emplace(out.graph, std::move(comps));
  return out;
}

std::string serialize(const SignedEulerSystem& system) {
  std::ostringstream out;
  for (const auto& c : system.components()) {
    out << "dow " << c.name << ":";
    for (const auto& o : c.word)
      out << ' ' << o.vertex << (o.sign == Sign::plus ? '+' : '-');
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Euler system extraction (Hierholzer, least-half-edge-id tie breaking)

SignedEulerSystem euler_system(std::shared_ptr<const FourRegularGraph> g) {
  const auto& graph = *g;
  std::vector<bool> used(graph.half_edge_count(), false);

  // Greedy closed subtour departing along h; returns the depart ids.
  auto subtour = [&](int h) {
    std::vector<int> steps;
    while (true) {
      used[h] = true;
      int arr = graph.mate(h);
      used[arr] = true;
      steps.push_back(h);
      int next = -1;
      for (int cand : graph.incident(graph.vertex_of(arr)))
        if (!used[cand]) {
          next = cand;
          break;
        }
      if (next < 0) break;
      h = next;
    }
    return steps;
  };

  std::vector<EulerComponent> comps;
  for (const auto& comp_vertices : graph.components()) {
    // Least half-edge of the component.
    int start = -1;
    for (int h = 0; h < graph.half_edge_count() && start < 0; ++h)
      if (graph.component_of(graph.vertex_of(h)) ==
          graph.component_of(comp_vertices.front()))
        start = h;

    std::vector<int> circuit = subtour(start);
    while (true) {
      size_t at = circuit.size();
      int fresh = -1;
      for (size_t i = 0; i < circuit.size() && fresh < 0; ++i)
        for (int cand : graph.incident(graph.vertex_of(circuit[i])))
          if (!used[cand]) {
            at = i;
            fresh = cand;
            break;
          }
      if (fresh < 0) break;
      auto sub = subtour(fresh);
      circuit.insert(circuit.begin() + at, sub.begin(), sub.end());
    }

    EulerComponent c;
    c.name = comp_vertices.front();
    std::set<VertexId> emitted;
    for (int dep : circuit) {
      const VertexId& v = graph.vertex_of(dep);
      Sign s = emitted.insert(v).second ? Sign::plus : Sign::minus;
      c.word.push_back({v, s});
      c.trace.push_back(dep);
      c.trace.push_back(graph.mate(dep));
    }
    comps.push_back(std::move(c));
  }
  return SignedEulerSystem(std::move(g), std::move(comps));
}

// ---------------------------------------------------------------------------
// Realizing a word list on an existing graph

namespace {

bool assign_steps(const FourRegularGraph& g, const std::vector<SignedOccurrence>& word,
                  std::vector<bool>& used, std::vector<int>& trace, int i) {
  int n = static_cast<int>(word.size());
  if (i == n) return true;
  const VertexId& from = word[i].vertex;
  const VertexId& to = word[(i + 1) % n].vertex;
  for (int h : g.incident(from)) {
    int m = g.mate(h);
    if (used[h] || used[m] || g.vertex_of(m) != to) continue;
    used[h] = used[m] = true;
    trace[2 * i] = h;
    trace[2 * i + 1] = m;
    if (assign_steps(g, word, used, trace, i + 1)) return true;
    used[h] = used[m] = false;
  }
  return false;
}

}  // namespace

SignedEulerSystem realize_in_graph(std::shared_ptr<const FourRegularGraph> g,
                                   const std::vector<EulerComponent>& words) {
  std::vector<bool> used(g->half_edge_count(), false);
  std::vector<EulerComponent> comps;
  for (const auto& w : words) {
    EulerComponent c;
    c.name = w.name;
    c.word = w.word;
    for (const auto& o : c.word)
      if (!g->has_vertex(o.vertex))
        throw Error("vertex '" + o.vertex + "' is not in the graph");
    c.trace.assign(2 * c.word.size(), -1);
    if (!assign_steps(*g, c.word, used, c.trace, 0))
      throw Error("word '" + w.name + "' cannot be traced in the graph");
    comps.push_back(std::move(c));
  }
  return SignedEulerSystem(std::move(g), std::move(comps));
}

SignedEulerSystem realize_in_graph(std::shared_ptr<const FourRegularGraph> g,
                                   std::string_view dow_text) {
  auto parsed = parse_graph(dow_text);
  if (!parsed.euler) throw Error("expected dow input when realizing a word");
  return realize_in_graph(std::move(g), parsed.euler->components());
}

}  // namespace quartic
