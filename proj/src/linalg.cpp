#include "quartic/linalg.hpp"

#include <utility>

namespace quartic {

namespace {

// Row echelon reduction over GF(2); returns the rank. The matrix is consumed.
int gf2_eliminate(Gf2Matrix& m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m.at(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      // Swap via three additions to stay within the row-op API.
      m.add_row(pivot, rank);
      m.add_row(rank, pivot);
      m.add_row(pivot, rank);
    }
    for (int r = 0; r < m.rows(); ++r)
      if (r != rank && m.at(r, col)) m.add_row(rank, r);
    ++rank;
  }
  return rank;
}

}  // namespace

int gf2_rank(const Gf2Matrix& m) {
  Gf2Matrix copy = m;
  return gf2_eliminate(copy);
}

int gf2_nullity(const Gf2Matrix& m) { return m.cols() - gf2_rank(m); }

Gf2Matrix gf2_inverse(const Gf2Matrix& m) {
  if (m.rows() != m.cols()) throw Error("cannot invert a non-square matrix");
  int n = m.rows();
  // Augmented [m | I], eliminated together.
  std::vector<std::string> acols = m.col_ids();
  for (const auto& id : m.row_ids()) acols.push_back("aug:" + id);
  Gf2Matrix aug(m.row_ids(), acols);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, n + i, true);
  }
  if (gf2_eliminate(aug) != n) throw Error("matrix is singular over GF(2)");
  // After full elimination the left block is a row-permuted identity; undo
  // the permutation by matching pivot columns.
  Gf2Matrix inv(m.col_ids(), m.row_ids());
  for (int r = 0; r < n; ++r) {
    int lead = -1;
    for (int j = 0; j < n && lead < 0; ++j)
      if (aug.at(r, j)) lead = j;
    for (int j = 0; j < n; ++j) inv.set(lead, j, aug.at(r, n + j));
  }
  return inv;
}

bool gf2_row_space_equal(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.col_ids() != b.col_ids()) throw Error("row spaces live in different spaces");
  Gf2Matrix stacked(
      [&] {
        std::vector<std::string> ids;
        for (const auto& id : a.row_ids()) ids.push_back("a:" + id);
        for (const auto& id : b.row_ids()) ids.push_back("b:" + id);
        return ids;
      }(),
      a.col_ids());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) stacked.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) stacked.set(a.rows() + i, j, b.at(i, j));
  int ra = gf2_rank(a), rb = gf2_rank(b);
  return ra == rb && gf2_rank(stacked) == ra;
}

// --- Integer (fraction-free) elimination ------------------------------------

namespace {

struct BareissResult {
  int rank = 0;
  Int det = 0;       // meaningful for square inputs only
  bool det_valid = false;
};

// Bareiss fraction-free elimination with first-nonzero pivoting. Divisions
// are exact at every step.
BareissResult bareiss(IntMatrix m) {
  BareissResult res;
  int rows = m.rows(), cols = m.cols();
  Int prev = 1;
  int sign = 1;
  bool skipped = false;
  for (int col = 0; col < cols && res.rank < rows; ++col) {
    int pivot = -1;
    for (int r = res.rank; r < rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      skipped = true;
      continue;
    }
    if (pivot != res.rank) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(res.rank, j));
      sign = -sign;
    }
    const Int& p = m.at(res.rank, col);
    for (int r = res.rank + 1; r < rows; ++r) {
      for (int j = col + 1; j < cols; ++j)
        m.at(r, j) = (p * m.at(r, j) - m.at(r, col) * m.at(res.rank, j)) / prev;
      m.at(r, col) = 0;
    }
    prev = p;
    ++res.rank;
  }
  if (rows == cols) {
    res.det_valid = true;
    res.det = (res.rank == rows && !skipped) ? Int(sign * prev) : Int(0);
  }
  return res;
}

}  // namespace

int rat_rank(const IntMatrix& m) { return bareiss(m).rank; }

Int rat_det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  return bareiss(m).det;
}

// --- Rational elimination ----------------------------------------------------

namespace {

int rat_eliminate(RatMatrix& m, Rat* det) {
  int rank = 0;
  Rat d = 1;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      d = 0;
      continue;
    }
    if (pivot != rank) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
      d = -d;
    }
    const Rat p = m.at(rank, col);
    d *= p;
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (m.at(r, col) == 0) continue;
      Rat factor = m.at(r, col) / p;
      for (int j = col; j < m.cols(); ++j) m.at(r, j) -= factor * m.at(rank, j);
    }
    ++rank;
  }
  if (det) *det = (rank == m.rows() && m.rows() == m.cols()) ? d : Rat(0);
  return rank;
}

}  // namespace

int rat_rank(const RatMatrix& m) {
  RatMatrix copy = m;
  return rat_eliminate(copy, nullptr);
}

Rat rat_det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  RatMatrix copy = m;
  Rat det;
  rat_eliminate(copy, &det);
  return det;
}

RatMatrix rat_inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("cannot invert a non-square matrix");
  int n = m.rows();
  RatMatrix work = m;
  RatMatrix inv = RatMatrix::identity(m.row_ids());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw Error("matrix is singular");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rat p = work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      Rat f = work.at(r, col);
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  // Result maps row space back: ids transpose.
  RatMatrix out(m.col_ids(), m.row_ids());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = inv.at(i, j);
  return out;
}

RatMatrix rat_inverse(const IntMatrix& m) { return rat_inverse(to_rational(m)); }

bool row_space_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.col_ids() != b.col_ids()) throw Error("row spaces live in different spaces");
  int ra = rat_rank(a), rb = rat_rank(b);
  if (ra != rb) return false;
  IntMatrix ab = a.stacked(b);
  return rat_rank(ab) == ra;
}

bool row_space_equal(const RatMatrix& a, const RatMatrix& b) {
  if (a.col_ids() != b.col_ids()) throw Error("row spaces live in different spaces");
  int ra = rat_rank(a), rb = rat_rank(b);
  if (ra != rb) return false;
  RatMatrix ab = a.stacked(b);
  return rat_rank(ab) == ra;
}

}  // namespace quartic
