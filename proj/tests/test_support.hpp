// Shared helpers for the test suites: fixture loading plus small independent
// oracles (cyclic word matching, pattern-scan interlacement, exhaustive GF(2)
// null space, cofactor determinants) used to cross-check the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quartic/graph.hpp"
#include "quartic/matrix.hpp"
#include "quartic/partition.hpp"

#ifndef QUARTIC_FIXTURES
#error "QUARTIC_FIXTURES must point at the fixture directory"
#endif

namespace support {

inline std::string fixture_path(const std::string& name) {
  return std::string(QUARTIC_FIXTURES) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline quartic::SignedEulerSystem load_system(const std::string& name) {
  auto parsed = quartic::parse_graph(read_fixture(name));
  if (parsed.euler) return *parsed.euler;
  return quartic::euler_system(parsed.graph);
}

inline quartic::CircuitPartition load_partition(const std::string& name,
                                                const quartic::SignedEulerSystem& c) {
  return quartic::parse_partition(read_fixture(name), c);
}

// Letters of a one-component system, signs stripped.
inline std::string letters(const quartic::SignedEulerSystem& s, int component = 0) {
  std::string out;
  for (const auto& o : s.components().at(component).word) out += o.vertex;
  return out;
}

// True when a and b agree as cyclic sequences (no reversal).
inline bool cyclic_equal(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return false;
  for (size_t r = 0; r < a.size(); ++r)
    if (a.substr(r) + a.substr(0, r) == b) return true;
  return false;
}

// Interlacement by brute pattern scan: v and w alternate v..w..v..w around
// the word of one circuit.
inline bool oracle_interlaced(const std::vector<quartic::SignedOccurrence>& word,
                              const std::string& v, const std::string& w) {
  std::vector<std::string> hits;
  for (const auto& o : word)
    if (o.vertex == v || o.vertex == w) hits.push_back(o.vertex);
  if (hits.size() != 4) return false;
  return hits[0] != hits[1] && hits[1] != hits[2];
}

// Exhaustive GF(2) nullity: count vectors in the kernel, nullity = log2.
inline int oracle_gf2_nullity(const quartic::Gf2Matrix& m) {
  int n = static_cast<int>(m.col_ids().size());
  int rows = static_cast<int>(m.row_ids().size());
  if (n > 16) throw std::runtime_error("oracle_gf2_nullity: too many columns");
  std::uint64_t kernel = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    bool in_kernel = true;
    for (int i = 0; i < rows && in_kernel; ++i) {
      int parity = 0;
      for (int j = 0; j < n; ++j)
        if ((x >> j) & 1) parity ^= m.at(i, j) ? 1 : 0;
      in_kernel = parity == 0;
    }
    kernel += in_kernel ? 1 : 0;
  }
  int nullity = 0;
  while ((std::uint64_t{1} << nullity) < kernel) ++nullity;
  return nullity;
}

// Cofactor-expansion determinant, independent of the elimination code.
inline quartic::Int laplace_det(const std::vector<std::vector<quartic::Int>>& a) {
  size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  quartic::Int det = 0;
  for (size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<quartic::Int>> minor(n - 1, std::vector<quartic::Int>(n - 1));
    for (size_t r = 1; r < n; ++r)
      for (size_t c = 0, t = 0; c < n; ++c)
        if (c != j) minor[r - 1][t++] = a[r][c];
    quartic::Int term = a[0][j] * laplace_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

inline quartic::Int laplace_det(const quartic::IntMatrix& m) {
  size_t n = m.row_ids().size();
  std::vector<std::vector<quartic::Int>> a(n, std::vector<quartic::Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m.at(static_cast<int>(i), static_cast<int>(j));
  return laplace_det(a);
}

// All-phi/chi partition of a system from a bitmask over sorted vertices
// (bit set = follow the system, clear = cross consistently).
inline quartic::CircuitPartition mask_partition(const quartic::SignedEulerSystem& c,
                                                std::uint64_t mask) {
  quartic::LabelMap labels;
  const auto& vs = c.graph().sorted_vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    labels.emplace(vs[i], (mask >> i) & 1 ? quartic::TransitionLabel::phi
                                          : quartic::TransitionLabel::chi);
  return quartic::partition_from_labels(c, labels);
}

}  // namespace support
