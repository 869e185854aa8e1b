// Exact matrices over GF(2), the integers and the rationals, indexed by
// vertex ids, plus the interlacement-matrix constructions.
//
// Floating point is never used anywhere in this library: GF(2) rows are bit
// vectors, integer and rational entries are arbitrary precision.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quartic/graph.hpp"
#include "quartic/partition.hpp"

namespace quartic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense matrix with named rows and columns. T is Int or Rat.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::vector<std::string> row_ids, std::vector<std::string> col_ids)
      : row_ids_(std::move(row_ids)),
        col_ids_(std::move(col_ids)),
        data_(row_ids_.size() * col_ids_.size()) {}

  static Matrix identity(const std::vector<std::string>& ids) {
    Matrix m(ids, ids);
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return static_cast<int>(row_ids_.size()); }
  int cols() const { return static_cast<int>(col_ids_.size()); }
  const std::vector<std::string>& row_ids() const { return row_ids_; }
  const std::vector<std::string>& col_ids() const { return col_ids_; }

  T& at(int r, int c) { return data_.at(index(r, c)); }
  const T& at(int r, int c) const { return data_.at(index(r, c)); }

  int row_index(const std::string& id) const { return find(row_ids_, id); }
  int col_index(const std::string& id) const { return find(col_ids_, id); }

  Matrix operator*(const Matrix& o) const {
    if (col_ids_ != o.row_ids_) throw Error("matrix product shape mismatch");
    Matrix out(row_ids_, o.col_ids_);
    for (int i = 0; i < rows(); ++i)
      for (int k = 0; k < cols(); ++k) {
        const T& a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < o.cols(); ++j) out.at(i, j) += a * o.at(k, j);
      }
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    if (row_ids_ != o.row_ids_ || col_ids_ != o.col_ids_)
      throw Error("matrix difference shape mismatch");
    Matrix out(row_ids_, col_ids_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
  }

  Matrix transposed() const {
    Matrix out(col_ids_, row_ids_);
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < cols(); ++j) out.at(j, i) = at(i, j);
    return out;
  }

  // Stack o's rows under this matrix (same columns required).
  Matrix stacked(const Matrix& o) const {
    if (col_ids_ != o.col_ids_) throw Error("matrix stack shape mismatch");
    auto ids = row_ids_;
    ids.insert(ids.end(), o.row_ids_.begin(), o.row_ids_.end());
    Matrix out(ids, col_ids_);
    out.data_ = data_;
    out.data_.insert(out.data_.end(), o.data_.begin(), o.data_.end());
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  size_t index(int r, int c) const {
    if (r < 0 || r >= rows() || c < 0 || c >= cols())
      throw Error("matrix index out of range");
    return static_cast<size_t>(r) * col_ids_.size() + c;
  }
  static int find(const std::vector<std::string>& ids, const std::string& id) {
    for (size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return static_cast<int>(i);
    throw Error("unknown matrix index id '" + id + "'");
  }

  std::vector<std::string> row_ids_, col_ids_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

// Square submatrix on the given row/column ids, in the given order.
template <class T>
Matrix<T> principal_submatrix(const Matrix<T>& m, const std::vector<std::string>& ids) {
  Matrix<T> out(ids, ids);
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = 0; j < ids.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) =
          m.at(m.row_index(ids[i]), m.col_index(ids[j]));
  return out;
}

// GF(2) matrix with bit-packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::vector<std::string> row_ids, std::vector<std::string> col_ids);
  static Gf2Matrix identity(const std::vector<std::string>& ids);

  int rows() const { return static_cast<int>(row_ids_.size()); }
  int cols() const { return static_cast<int>(col_ids_.size()); }
  const std::vector<std::string>& row_ids() const { return row_ids_; }
  const std::vector<std::string>& col_ids() const { return col_ids_; }
  int row_index(const std::string& id) const;
  int col_index(const std::string& id) const;

  bool at(int r, int c) const;
  void set(int r, int c, bool value);
  // row dst += row src (over GF(2)).
  void add_row(int src, int dst);

  Gf2Matrix operator*(const Gf2Matrix& o) const;
  bool operator==(const Gf2Matrix&) const = default;

 private:
  size_t word_index(int r, int c) const;
  std::vector<std::string> row_ids_, col_ids_;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

Gf2Matrix mod2(const IntMatrix& m);
RatMatrix to_rational(const IntMatrix& m);
// Throws when an entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);

// --- Interlacement constructions -------------------------------------------
// All vertex-indexed matrices use the sorted vertex order of the graph.

// GF(2) interlacement matrix of c: entry vw = 1 iff v and w are interlaced.
Gf2Matrix interlacement(const SignedEulerSystem& c);

// Interlacement restricted to the non-phi vertices of p, with diagonal 1 at
// psi vertices.
Gf2Matrix reduced_interlacement(const SignedEulerSystem& c, const CircuitPartition& p);

// Modified interlacement matrix M: interlacement with each phi column turned
// into a standard basis column and each psi diagonal entry set to 1.
Gf2Matrix modified_interlacement(const SignedEulerSystem& c, const CircuitPartition& p);

// Signed interlacement: vw is +1 when the occurrence between v- and v+ is w+,
// -1 when it is w-, 0 otherwise. Skew-symmetric with zero diagonal.
IntMatrix signed_interlacement(const SignedEulerSystem& c);

// Standard form of the integer interlacement matrix for (c, p), computed
// entrywise from the signed word.
IntMatrix standard_form(const SignedEulerSystem& c, const CircuitPartition& p);

// The same matrix computed the long way: row v is the tally of the projection
// of the fundamental circuit through v onto the touch-graph. Kept separate so
// the two construction routes can be compared.
IntMatrix standard_form_by_tracing(const SignedEulerSystem& c, const CircuitPartition& p);

// Swap the '+'/'-' designation at v.
SignedEulerSystem flip_sign(const SignedEulerSystem& c, const VertexId& v);

// --- Block structure --------------------------------------------------------

// Structural check of a standard-form matrix partitioned by transition label.
struct BlockReport {
  std::vector<VertexId> phi, chi, psi;
  bool ok = true;
  std::vector<std::string> violations;
};

// Verifies: phi columns are standard basis columns; the phi/chi block has
// entries in {-1,0,1} and the phi/psi block in {0,1,2}; the chi/chi block is
// skew-symmetric in {-1,0,1}; chi/psi in {0,1,2} and psi/chi in {-1,0,1} with
// the paired-entry constraint (a chi/psi entry of 1 faces a psi/chi entry of
// +-1, entries 0 or 2 face 0); the psi/psi block has unit diagonal, entries
// in {0,1,2}, and is symmetric mod 2.
BlockReport submatrix_blocks(const IntMatrix& m, const LabelMap& labels);

// --- Serialization ----------------------------------------------------------

std::string to_tsv(const Gf2Matrix& m);
std::string to_tsv(const IntMatrix& m);
std::string to_tsv(const RatMatrix& m);
// One line per row: "<row id>\t<hex>", columns packed 4 per digit, column 0
// in the most significant bit of the first digit.
std::string to_hex(const Gf2Matrix& m);
std::string to_json(const Gf2Matrix& m);
std::string to_json(const IntMatrix& m);
std::string to_json(const RatMatrix& m);

}  // namespace quartic
