// Command-line surface for the library: parsing, matrix emission,
// verification sweeps, rewrites and counting.
//
// Exit codes: 0 success / all checks passed, 1 a verification failed,
// 2 malformed input or unusable arguments.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quartic/counting.hpp"
#include "quartic/cycles.hpp"
#include "quartic/linalg.hpp"
#include "quartic/matrix.hpp"
#include "quartic/partition.hpp"
#include "quartic/transforms.hpp"

using json = nlohmann::ordered_json;
using namespace quartic;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SignedEulerSystem load_system(const std::string& path) {
  ParsedGraph parsed = parse_graph(read_file(path));
  if (parsed.euler) return *parsed.euler;
  return euler_system(parsed.graph);
}

std::string word_text(const EulerComponent& comp) {
  std::string out;
  for (const auto& occ : comp.word) {
    if (!out.empty()) out += ' ';
    out += occ.vertex;
    out += occ.sign == Sign::plus ? '+' : '-';
  }
  return out;
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

// Tab-separated pass/fail table with a summary row.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> cells, bool ok, const std::vector<std::string>& violations) {
    ++total_;
    passed_ += ok ? 1 : 0;
    cells.push_back(ok ? "pass" : "fail");
    rows_.push_back(std::move(cells));
    if (!ok)
      for (const auto& v : violations)
        if (notes_.size() < 20) notes_.push_back(v);
  }

  bool all_passed() const { return passed_ == total_; }

  std::string text() const {
    std::ostringstream out;
    for (size_t i = 0; i < header_.size(); ++i) out << (i ? "\t" : "") << header_[i];
    out << "\tresult\n";
    for (const auto& row : rows_) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
      out << "\n";
    }
    out << "summary\t" << passed_ << "/" << total_ << "\t" << (all_passed() ? "pass" : "fail")
        << "\n";
    for (const auto& n : notes_) out << "note\t" << n << "\n";
    return out.str();
  }

  json to_json() const {
    json rows = json::array();
    for (const auto& row : rows_) {
      json r;
      for (size_t i = 0; i < header_.size(); ++i) r[header_[i]] = row[i];
      r["result"] = row.back();
      rows.push_back(std::move(r));
    }
    return json{{"rows", rows}, {"passed", passed_}, {"total", total_}, {"notes", notes_}};
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> notes_;
  int passed_ = 0, total_ = 0;
};

CircuitPartition phi_chi_partition(const SignedEulerSystem& sys, std::uint64_t mask) {
  LabelMap labels;
  const auto& vertices = sys.graph().sorted_vertices();
  for (size_t i = 0; i < vertices.size(); ++i)
    labels.emplace(vertices[i], (mask >> i) & 1 ? TransitionLabel::phi : TransitionLabel::chi);
  return partition_from_labels(sys, labels);
}

// ---------------------------------------------------------------------------

struct CommonOpts {
  std::string graph_file;
  std::string partition_file;
  bool json_out = false;
};

int run_parse(const CommonOpts& o) {
  ParsedGraph parsed = parse_graph(read_file(o.graph_file));
  const FourRegularGraph& g = *parsed.graph;
  json j;
  j["vertices"] = g.sorted_vertices();
  json edges = json::array();
  std::string text;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_endpoints(e);
    edges.push_back(json::array({u, v}));
  }
  j["edges"] = edges;
  j["components"] = g.components();
  if (parsed.euler) {
    j["euler"] = serialize(*parsed.euler);
    text = serialize(*parsed.euler);
  } else {
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge_endpoints(e);
      text += "edge " + u + " " + v + "\n";
    }
  }
  emit(j, o.json_out, text);
  return 0;
}

int run_euler(const CommonOpts& o) {
  ParsedGraph parsed = parse_graph(read_file(o.graph_file));
  SignedEulerSystem sys = euler_system(parsed.graph);
  emit(json{{"euler", serialize(sys)}}, o.json_out, serialize(sys));
  return 0;
}

int run_trace(const CommonOpts& o) {
  SignedEulerSystem sys = load_system(o.graph_file);
  json comps = json::array();
  std::string text;
  for (const auto& comp : sys.components()) {
    comps.push_back(json{{"name", comp.name}, {"word", word_text(comp)}, {"trace", comp.trace}});
    text += "component " + comp.name + ": " + word_text(comp) + "\n";
    text += "steps " + comp.name + ":";
    for (int i = 0; i < comp.length(); ++i)
      text += " " + std::to_string(comp.trace[2 * i]) + ">" + std::to_string(comp.trace[2 * i + 1]);
    text += "\n";
  }
  emit(json{{"components", comps}}, o.json_out, text);
  return 0;
}

CircuitPartition required_partition(const CommonOpts& o, const SignedEulerSystem& sys) {
  if (o.partition_file.empty()) throw Error("this command needs --partition");
  return parse_partition(read_file(o.partition_file), sys);
}

int run_touch(const CommonOpts& o, bool transitions_only) {
  SignedEulerSystem sys = load_system(o.graph_file);
  CircuitPartition p = required_partition(o, sys);
  if (transitions_only) {
    std::string text;
    for (const auto& v : sys.graph().sorted_vertices()) {
      const Transition& t = p.transition(v);
      text += "tr " + v + ": " + std::to_string(t.first_pair()[0]) + " " +
              std::to_string(t.first_pair()[1]) + " | " + std::to_string(t.second_pair()[0]) +
              " " + std::to_string(t.second_pair()[1]) + "\n";
    }
    std::cout << text;
    return 0;
  }
  TouchGraph t(p, sys);
  json edges = json::array();
  std::string text = "circuits\t" + std::to_string(t.vertex_count()) + "\n";
  text += "components\t" + std::to_string(t.component_count()) + "\n";
  for (const auto& e : t.edges()) {
    edges.push_back(json{{"vertex", e.f_vertex}, {"tail", e.tail}, {"head", e.head}});
    text += "edge\t" + e.f_vertex + "\tg" + std::to_string(e.tail) + "\tg" +
            std::to_string(e.head) + "\n";
  }
  emit(json{{"circuits", t.vertex_count()},
            {"components", t.component_count()},
            {"edges", edges}},
       o.json_out, text);
  return 0;
}

struct MatrixOpts : CommonOpts {
  bool gf2 = false, standard = false, signed_inter = false, hex = false;
};

int run_matrix(const MatrixOpts& o) {
  SignedEulerSystem sys = load_system(o.graph_file);
  int picked = int(o.gf2) + int(o.standard) + int(o.signed_inter);
  if (picked > 1) throw Error("choose one of --gf2, --standard, --signed-interlacement");
  if (o.hex && !o.gf2) throw Error("--hex applies only to --gf2");

  if (o.signed_inter) {
    IntMatrix m = signed_interlacement(sys);
    if (o.json_out) std::cout << to_json(m) << "\n";
    else std::cout << to_tsv(m);
    return 0;
  }
  CircuitPartition p = required_partition(o, sys);
  if (o.gf2) {
    Gf2Matrix m = modified_interlacement(sys, p);
    if (o.json_out) std::cout << to_json(m) << "\n";
    else if (o.hex) std::cout << to_hex(m);
    else std::cout << to_tsv(m);
    return 0;
  }
  IntMatrix m = standard_form(sys, p);
  if (o.json_out) std::cout << to_json(m) << "\n";
  else std::cout << to_tsv(m);
  return 0;
}

struct VerifyOpts : CommonOpts {
  bool main_theorem = false, duality = false, nullity = false;
  bool naturality = false, transposition = false, detzero = false;
  bool all_partitions = false;
  std::vector<std::string> pair;
  int samples = 20;
  unsigned long long seed = 0;
};

int finish(const Table& table, bool json_out) {
  if (json_out) std::cout << table.to_json().dump() << "\n";
  else std::cout << table.text();
  return table.all_passed() ? 0 : 1;
}

// Runs f(tag, partition) over the requested sweep: the explicit partition if
// one was given, otherwise every partition (or every orientation-consistent
// one when phi_chi_only is set).
template <class F>
void sweep_partitions(const VerifyOpts& o, const SignedEulerSystem& sys, bool phi_chi_only, F f) {
  if (!o.partition_file.empty()) {
    f("input", parse_partition(read_file(o.partition_file), sys));
    return;
  }
  if (phi_chi_only) {
    int n = sys.graph().vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      f(std::to_string(mask), phi_chi_partition(sys, mask));
    return;
  }
  std::uint64_t total = partition_count(sys);
  for (std::uint64_t index = 0; index < total; ++index)
    f(std::to_string(index), partition_at(sys, index));
}

int run_verify(const VerifyOpts& o) {
  SignedEulerSystem sys = load_system(o.graph_file);
  int modes = int(o.main_theorem) + int(o.duality) + int(o.nullity) + int(o.naturality) +
              int(o.transposition) + int(o.detzero);
  if (modes != 1)
    throw Error("choose exactly one of --main, --duality, --nullity, --naturality, "
                "--transposition, --detzero");

  if (o.main_theorem) {
    Table table({"partition", "circuits", "rank", "nullity"});
    sweep_partitions(o, sys, false, [&](const std::string& tag, const CircuitPartition& p) {
      MainTheoremReport rep = verify_main_theorem(sys, p);
      table.add({tag, std::to_string(p.size()),
                 std::to_string(sys.graph().vertex_count() - rep.rational_nullity),
                 std::to_string(rep.rational_nullity)},
                rep.ok, rep.violations);
    });
    return finish(table, o.json_out);
  }

  if (o.duality) {
    Table table({"partition", "circuits", "cycle_rank", "cocycle_rank"});
    sweep_partitions(o, sys, false, [&](const std::string& tag, const CircuitPartition& p) {
      DualityReport rep = verify_duality(TouchGraph(p, sys));
      table.add({tag, std::to_string(p.size()), std::to_string(rep.rank_cycle),
                 std::to_string(rep.rank_cocycle)},
                rep.ok, rep.violations);
    });
    return finish(table, o.json_out);
  }

  if (o.nullity) {
    int components = sys.graph().component_count();
    Table table({"partition", "circuits", "nullity", "expected"});
    sweep_partitions(o, sys, false, [&](const std::string& tag, const CircuitPartition& p) {
      int nullity = gf2_nullity(reduced_interlacement(sys, p));
      int expected = p.size() - components;
      table.add({tag, std::to_string(p.size()), std::to_string(nullity),
                 std::to_string(expected)},
                nullity == expected, {"nullity formula fails"});
    });
    return finish(table, o.json_out);
  }

  if (o.naturality) {
    Table table({"partition", "vertex"});
    auto check = [&](const std::string& tag, const CircuitPartition& p) {
      for (const auto& v : sys.graph().sorted_vertices()) {
        NaturalityReport rep = verify_kappa_naturality(sys, v, p);
        table.add({tag, v}, rep.ok, rep.violations);
      }
    };
    if (o.partition_file.empty() && !o.all_partitions) {
      // Deterministic sample of the partition space.
      std::mt19937_64 rng(o.seed);
      std::uint64_t total = partition_count(sys);
      std::uint64_t count = std::min<std::uint64_t>(o.samples, total);
      for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t index = rng() % total;
        check(std::to_string(index), partition_at(sys, index));
      }
    } else {
      sweep_partitions(o, sys, false, check);
    }
    return finish(table, o.json_out);
  }

  if (o.transposition) {
    if (!o.pair.empty() && o.pair.size() != 2) throw Error("--pair needs two vertices");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (o.pair.size() == 2) {
      pairs.emplace_back(o.pair[0], o.pair[1]);
    } else {
      const auto& vs = sys.graph().sorted_vertices();
      for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
          if (sys.interlaced(vs[i], vs[j])) pairs.emplace_back(vs[i], vs[j]);
    }
    Table table({"partition", "pair"});
    sweep_partitions(o, sys, true, [&](const std::string& tag, const CircuitPartition& p) {
      for (const auto& [v, w] : pairs) {
        NaturalityReport rep = verify_transposition_rows(sys, v, w, p);
        table.add({tag, v + "," + w}, rep.ok, rep.violations);
      }
    });
    return finish(table, o.json_out);
  }

  // --detzero
  Table table({"partition", "circuits", "det"});
  sweep_partitions(o, sys, true, [&](const std::string& tag, const CircuitPartition& p) {
    DetzeroReport rep = verify_detzero(sys, p);
    table.add({tag, std::to_string(p.size()), rep.det.str()}, rep.ok, rep.violations);
  });
  return finish(table, o.json_out);
}

struct CountOpts : CommonOpts {
  int brute_max = 16;
};

int run_count(const CountOpts& o) {
  SignedEulerSystem sys = load_system(o.graph_file);
  Int det = count_euler_det(sys);
  json j{{"count", det.str()}};
  std::string text = "count\t" + det.str() + "\n";
  bool ok = true;
  if (sys.graph().vertex_count() <= o.brute_max) {
    Int brute = count_euler_brute(sys);
    ok = brute == det;
    j["brute"] = brute.str();
    j["match"] = ok;
    text += "brute\t" + brute.str() + "\nmatch\t" + (ok ? "yes" : "no") + "\n";
  }
  emit(j, o.json_out, text);
  return ok ? 0 : 1;
}

struct CensusOpts : CommonOpts {
  int max_vertices = 10;
};

int run_census(const CensusOpts& o) {
  SignedEulerSystem sys = load_system(o.graph_file);
  CensusReport rep = partition_census(sys, o.max_vertices);
  json rows = json::array();
  std::string text = "circuits\tcount\n";
  for (const auto& [circuits, count] : rep.by_circuits) {
    rows.push_back(json{{"circuits", circuits}, {"count", count}});
    text += std::to_string(circuits) + "\t" + std::to_string(count) + "\n";
  }
  text += "total\t" + std::to_string(rep.total) + "\n";
  text += "nullity\t" + std::string(rep.ok ? "pass" : "fail") + "\n";
  emit(json{{"rows", rows}, {"total", rep.total}, {"nullity_ok", rep.ok},
            {"violations", rep.violations}},
       o.json_out, text);
  return rep.ok ? 0 : 1;
}

struct TransformOpts : CommonOpts {
  std::string kappa_vertex;
  std::vector<std::string> transpose;
  std::string path_file;
};

int run_transform(const TransformOpts& o) {
  SignedEulerSystem sys = load_system(o.graph_file);
  int picked = int(!o.kappa_vertex.empty()) + int(!o.transpose.empty()) + int(!o.path_file.empty());
  if (picked != 1) throw Error("choose exactly one of --kappa, --transpose, --path");

  if (!o.kappa_vertex.empty()) {
    auto variants = kappa_transform(sys, o.kappa_vertex);
    emit(json{{"variants", {serialize(variants[0]), serialize(variants[1])}}, {"vertex", o.kappa_vertex}},
         o.json_out,
         "# variant 0\n" + serialize(variants[0]) + "# variant 1\n" + serialize(variants[1]));
    return 0;
  }
  if (!o.transpose.empty()) {
    if (o.transpose.size() != 2) throw Error("--transpose needs two vertices");
    SignedEulerSystem out = transposition(sys, o.transpose[0], o.transpose[1]);
    emit(json{{"result", serialize(out)}}, o.json_out, serialize(out));
    return 0;
  }
  SignedEulerSystem target = realize_in_graph(sys.graph_ptr(), read_file(o.path_file));
  ReachabilityResult res = kappa_reachability(sys, target);
  json steps = json::array();
  std::string text = "kappa-steps\t" + std::to_string(res.kappa_steps.size()) + "\n";
  for (const auto& s : res.kappa_steps) {
    steps.push_back(json{{"vertex", s.vertex}, {"variant", s.variant}});
    text += "kappa\t" + s.vertex + "\t" + std::to_string(s.variant) + "\n";
  }
  json j{{"kappa", steps}};
  if (res.transposition_steps) {
    json tsteps = json::array();
    text += "transpose-steps\t" + std::to_string(res.transposition_steps->size()) + "\n";
    for (const auto& [v, w] : *res.transposition_steps) {
      tsteps.push_back(json::array({v, w}));
      text += "transpose\t" + v + "\t" + w + "\n";
    }
    j["transpositions"] = tsteps;
  }
  emit(j, o.json_out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circuit partitions, interlacement matrices and Euler-system rewrites "
               "of 4-regular multigraphs"};
  app.require_subcommand(1);

  CommonOpts parse_opts, euler_opts, trace_opts, touch_opts;
  MatrixOpts matrix_opts;
  VerifyOpts verify_opts;
  CountOpts count_opts;
  CensusOpts census_opts;
  TransformOpts transform_opts;
  bool touch_transitions = false;
  int exit_code = 0;

  auto add_common = [](CLI::App* cmd, CommonOpts& o, bool with_partition) {
    cmd->add_option("graph", o.graph_file, "graph file (dow or edge lines)")->required();
    if (with_partition)
      cmd->add_option("--partition", o.partition_file, "partition file (label, tr or dow lines)");
    cmd->add_flag("--json", o.json_out, "structured output");
  };

  auto* cmd_parse = app.add_subcommand("parse", "parse and reprint canonically");
  add_common(cmd_parse, parse_opts, false);
  cmd_parse->callback([&] { exit_code = run_parse(parse_opts); });

  auto* cmd_euler = app.add_subcommand("euler", "deterministic Euler system of the graph");
  add_common(cmd_euler, euler_opts, false);
  cmd_euler->callback([&] { exit_code = run_euler(euler_opts); });

  auto* cmd_trace = app.add_subcommand("trace", "signed words with half-edge steps");
  add_common(cmd_trace, trace_opts, false);
  cmd_trace->callback([&] { exit_code = run_trace(trace_opts); });

  auto* cmd_touch = app.add_subcommand("touch", "touch-graph of a partition");
  add_common(cmd_touch, touch_opts, true);
  cmd_touch->add_flag("--transitions", touch_transitions,
                      "print the partition's transitions instead (tr lines)");
  cmd_touch->callback([&] { exit_code = run_touch(touch_opts, touch_transitions); });

  auto* cmd_matrix = app.add_subcommand("matrix", "interlacement matrices");
  add_common(cmd_matrix, matrix_opts, true);
  cmd_matrix->add_flag("--standard", matrix_opts.standard, "integer standard form (default)");
  cmd_matrix->add_flag("--gf2", matrix_opts.gf2, "GF(2) matrix");
  cmd_matrix->add_flag("--signed-interlacement", matrix_opts.signed_inter,
                       "signed interlacement matrix (no partition needed)");
  cmd_matrix->add_flag("--hex", matrix_opts.hex, "hex-packed rows (GF(2) only)");
  cmd_matrix->callback([&] { exit_code = run_matrix(matrix_opts); });

  auto* cmd_verify = app.add_subcommand("verify", "verification sweeps");
  add_common(cmd_verify, verify_opts, true);
  cmd_verify->add_flag("--main", verify_opts.main_theorem, "row space, reduction and nullity");
  cmd_verify->add_flag("--duality", verify_opts.duality, "cycle/cocycle duality on touch-graphs");
  cmd_verify->add_flag("--nullity", verify_opts.nullity, "circuit-nullity formula");
  cmd_verify->add_flag("--naturality", verify_opts.naturality, "rewrite row operations, GF(2)");
  cmd_verify->add_flag("--transposition", verify_opts.transposition,
                       "trail-exchange row identities");
  cmd_verify->add_flag("--detzero", verify_opts.detzero, "determinant / Euler equivalence");
  cmd_verify->add_flag("--all-partitions", verify_opts.all_partitions,
                       "sweep every partition (naturality otherwise samples)");
  cmd_verify->add_option("--pair", verify_opts.pair, "vertex pair for --transposition")
      ->expected(2);
  cmd_verify->add_option("--samples", verify_opts.samples, "sample count for --naturality");
  cmd_verify->add_option("--seed", verify_opts.seed, "seed for sampled sweeps");
  cmd_verify->callback([&] { exit_code = run_verify(verify_opts); });

  auto* cmd_count = app.add_subcommand("count", "Euler systems respecting the edge directions");
  add_common(cmd_count, count_opts, false);
  cmd_count->add_option("--brute-max", count_opts.brute_max,
                        "largest vertex count for the brute-force cross-check");
  cmd_count->callback([&] { exit_code = run_count(count_opts); });

  auto* cmd_census = app.add_subcommand("census", "circuit counts over all partitions");
  add_common(cmd_census, census_opts, false);
  cmd_census->add_option("--max-vertices", census_opts.max_vertices,
                         "refuse graphs larger than this");
  cmd_census->callback([&] { exit_code = run_census(census_opts); });

  auto* cmd_transform = app.add_subcommand("transform", "rewrite Euler systems");
  add_common(cmd_transform, transform_opts, false);
  cmd_transform->add_option("--kappa", transform_opts.kappa_vertex, "rewrite at this vertex");
  cmd_transform->add_option("--transpose", transform_opts.transpose, "exchange trails at a pair")
      ->expected(2);
  cmd_transform->add_option("--path", transform_opts.path_file,
                            "find a rewrite sequence to this system");
  cmd_transform->callback([&] { exit_code = run_transform(transform_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
