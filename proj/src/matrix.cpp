#include "quartic/matrix.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace quartic {

Gf2Matrix::Gf2Matrix(std::vector<std::string> row_ids, std::vector<std::string> col_ids)
    : row_ids_(std::move(row_ids)), col_ids_(std::move(col_ids)) {
  words_per_row_ = (cols() + 63) / 64;
  words_.assign(static_cast<size_t>(rows()) * words_per_row_, 0);
}

Gf2Matrix Gf2Matrix::identity(const std::vector<std::string>& ids) {
  Gf2Matrix m(ids, ids);
  for (int i = 0; i < m.rows(); ++i) m.set(i, i, true);
  return m;
}

int Gf2Matrix::row_index(const std::string& id) const {
  for (size_t i = 0; i < row_ids_.size(); ++i)
    if (row_ids_[i] == id) return static_cast<int>(i);
  throw Error("unknown matrix index id '" + id + "'");
}

int Gf2Matrix::col_index(const std::string& id) const {
  for (size_t i = 0; i < col_ids_.size(); ++i)
    if (col_ids_[i] == id) return static_cast<int>(i);
  throw Error("unknown matrix index id '" + id + "'");
}

size_t Gf2Matrix::word_index(int r, int c) const {
  if (r < 0 || r >= rows() || c < 0 || c >= cols())
    throw Error("matrix index out of range");
  return static_cast<size_t>(r) * words_per_row_ + c / 64;
}

bool Gf2Matrix::at(int r, int c) const {
  return (words_[word_index(r, c)] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(int r, int c, bool value) {
  std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (value)
    words_[word_index(r, c)] |= bit;
  else
    words_[word_index(r, c)] &= ~bit;
}

void Gf2Matrix::add_row(int src, int dst) {
  if (src < 0 || src >= rows() || dst < 0 || dst >= rows())
    throw Error("matrix index out of range");
  for (int k = 0; k < words_per_row_; ++k)
    words_[static_cast<size_t>(dst) * words_per_row_ + k] ^=
        words_[static_cast<size_t>(src) * words_per_row_ + k];
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
  if (col_ids_ != o.row_ids_) throw Error("matrix product shape mismatch");
  Gf2Matrix out(row_ids_, o.col_ids_);
  for (int i = 0; i < rows(); ++i)
    for (int k = 0; k < cols(); ++k)
      if (at(i, k))
        for (int w = 0; w < o.words_per_row_; ++w)
          out.words_[static_cast<size_t>(i) * o.words_per_row_ + w] ^=
              o.words_[static_cast<size_t>(k) * o.words_per_row_ + w];
  return out;
}

Gf2Matrix mod2(const IntMatrix& m) {
  Gf2Matrix out(m.row_ids(), m.col_ids());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out.set(i, j, (m.at(i, j) % 2) != 0);
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.row_ids(), m.col_ids());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Rat(m.at(i, j));
  return out;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.row_ids(), m.col_ids());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& q = m.at(i, j);
      if (denominator(q) != 1) throw Error("matrix entry is not an integer");
      out.at(i, j) = numerator(q);
    }
  return out;
}

// --- Interlacement constructions -------------------------------------------

Gf2Matrix interlacement(const SignedEulerSystem& c) {
  const auto& ids = c.graph().sorted_vertices();
  Gf2Matrix m(ids, ids);
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = 0; j < ids.size(); ++j)
      if (c.interlaced(ids[i], ids[j]))
        m.set(static_cast<int>(i), static_cast<int>(j), true);
  return m;
}

Gf2Matrix reduced_interlacement(const SignedEulerSystem& c, const CircuitPartition& p) {
  auto labels = label_transitions(c, p);
  std::vector<std::string> ids;
  for (const auto& v : c.graph().sorted_vertices())
    if (labels.at(v) != TransitionLabel::phi) ids.push_back(v);
  Gf2Matrix m(ids, ids);
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = 0; j < ids.size(); ++j) {
      bool e = i == j ? labels.at(ids[i]) == TransitionLabel::psi
                      : c.interlaced(ids[i], ids[j]);
      m.set(static_cast<int>(i), static_cast<int>(j), e);
    }
  return m;
}

Gf2Matrix modified_interlacement(const SignedEulerSystem& c, const CircuitPartition& p) {
  auto labels = label_transitions(c, p);
  Gf2Matrix m = interlacement(c);
  const auto& ids = c.graph().sorted_vertices();
  for (size_t j = 0; j < ids.size(); ++j) {
    switch (labels.at(ids[j])) {
      case TransitionLabel::phi:
        for (size_t i = 0; i < ids.size(); ++i)
          m.set(static_cast<int>(i), static_cast<int>(j), i == j);
        break;
      case TransitionLabel::psi:
        m.set(static_cast<int>(j), static_cast<int>(j), true);
        break;
      case TransitionLabel::chi:
        break;
    }
  }
  return m;
}

IntMatrix signed_interlacement(const SignedEulerSystem& c) {
  const auto& ids = c.graph().sorted_vertices();
  IntMatrix m(ids, ids);
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = 0; j < ids.size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) =
          c.signed_interlacement_entry(ids[i], ids[j]);
  return m;
}

IntMatrix standard_form(const SignedEulerSystem& c, const CircuitPartition& p) {
  auto labels = label_transitions(c, p);
  const auto& ids = c.graph().sorted_vertices();
  IntMatrix m(ids, ids);
  for (size_t i = 0; i < ids.size(); ++i) {
    const VertexId& v = ids[i];
    for (size_t j = 0; j < ids.size(); ++j) {
      const VertexId& w = ids[j];
      Int e = 0;
      if (i == j) {
        e = labels.at(v) == TransitionLabel::chi ? 0 : 1;
      } else if (c.component_index_of(v) != c.component_index_of(w)) {
        e = 0;
      } else {
        switch (labels.at(w)) {
          case TransitionLabel::phi:
            e = 0;
            break;
          case TransitionLabel::chi:
            // +1 when the w occurrence between v- and v+ is w+, -1 for w-.
            e = c.signed_interlacement_entry(v, w);
            break;
          case TransitionLabel::psi:
            // Counts the w occurrences between v- and v+: 0, 1 or 2.
            e = c.occurrences_between(v, w);
            break;
        }
      }
      m.at(static_cast<int>(i), static_cast<int>(j)) = e;
    }
  }
  return m;
}

IntMatrix standard_form_by_tracing(const SignedEulerSystem& c, const CircuitPartition& p) {
  TouchGraph t(p, c);
  const auto& ids = c.graph().sorted_vertices();
  IntMatrix m(ids, ids);
  for (size_t i = 0; i < ids.size(); ++i) {
    auto walk = fundamental_circuits(c, ids[i]).first;
    TouchWalk image = project_walk(walk, t);
    for (const auto& step : image.steps) {
      Int& entry = m.at(static_cast<int>(i), step.edge);
      entry += step.forward ? 1 : -1;
    }
  }
  return m;
}

SignedEulerSystem flip_sign(const SignedEulerSystem& c, const VertexId& v) {
  return c.flipped(v);
}

// --- Block structure --------------------------------------------------------

BlockReport submatrix_blocks(const IntMatrix& m, const LabelMap& labels) {
  BlockReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };

  for (const auto& id : m.row_ids()) {
    auto it = labels.find(id);
    if (it == labels.end()) throw Error("no label for vertex '" + id + "'");
    switch (it->second) {
      case TransitionLabel::phi: report.phi.push_back(id); break;
      case TransitionLabel::chi: report.chi.push_back(id); break;
      case TransitionLabel::psi: report.psi.push_back(id); break;
    }
  }

  auto entry = [&](const VertexId& r, const VertexId& c) -> const Int& {
    return m.at(m.row_index(r), m.col_index(c));
  };
  auto in_range = [](const Int& e, int lo, int hi) { return e >= lo && e <= hi; };
  auto cell = [](const VertexId& r, const VertexId& c) { return "(" + r + "," + c + ")"; };

  for (const auto& w : report.phi) {
    for (const auto& v : m.row_ids()) {
      const Int& e = entry(v, w);
      if (e != (v == w ? 1 : 0))
        fail("phi column entry " + cell(v, w) + " = " + e.str());
    }
  }
  for (const auto& v : report.phi) {
    for (const auto& w : report.chi)
      if (!in_range(entry(v, w), -1, 1))
        fail("phi/chi entry " + cell(v, w) + " outside {-1,0,1}");
    for (const auto& w : report.psi)
      if (!in_range(entry(v, w), 0, 2))
        fail("phi/psi entry " + cell(v, w) + " outside {0,1,2}");
  }
  for (const auto& v : report.chi) {
    for (const auto& w : report.chi) {
      if (!in_range(entry(v, w), -1, 1))
        fail("chi/chi entry " + cell(v, w) + " outside {-1,0,1}");
      if (entry(v, w) != -entry(w, v))
        fail("chi/chi block not skew-symmetric at " + cell(v, w));
    }
    for (const auto& w : report.psi) {
      const Int& a = entry(v, w);  // chi row, psi column
      const Int& b = entry(w, v);  // psi row, chi column
      if (!in_range(a, 0, 2)) fail("chi/psi entry " + cell(v, w) + " outside {0,1,2}");
      if (!in_range(b, -1, 1)) fail("psi/chi entry " + cell(w, v) + " outside {-1,0,1}");
      if ((a == 0 || a == 2) && b != 0)
        fail("paired entries " + cell(v, w) + "/" + cell(w, v) + " break the 0/2 rule");
      if (a == 1 && b == 0)
        fail("paired entries " + cell(v, w) + "/" + cell(w, v) + " break the 1 rule");
    }
  }
  for (const auto& v : report.psi)
    for (const auto& w : report.psi) {
      const Int& e = entry(v, w);
      if (v == w) {
        if (e != 1) fail("psi diagonal " + cell(v, w) + " = " + e.str());
      } else {
        if (!in_range(e, 0, 2)) fail("psi/psi entry " + cell(v, w) + " outside {0,1,2}");
        if ((e - entry(w, v)) % 2 != 0)
          fail("psi/psi block not symmetric mod 2 at " + cell(v, w));
      }
    }
  return report;
}

// --- Serialization ----------------------------------------------------------

namespace {

template <class GetEntry>
std::string tsv(const std::vector<std::string>& row_ids,
                const std::vector<std::string>& col_ids, GetEntry get) {
  std::ostringstream out;
  for (const auto& c : col_ids) out << '\t' << c;
  out << '\n';
  for (size_t i = 0; i < row_ids.size(); ++i) {
    out << row_ids[i];
    for (size_t j = 0; j < col_ids.size(); ++j)
      out << '\t' << get(static_cast<int>(i), static_cast<int>(j));
    out << '\n';
  }
  return out.str();
}

template <class GetEntry>
std::string json_record(const std::vector<std::string>& row_ids,
                        const std::vector<std::string>& col_ids, GetEntry get) {
  nlohmann::ordered_json j;
  j["rows"] = row_ids;
  j["cols"] = col_ids;
  auto entries = nlohmann::ordered_json::array();
  for (size_t i = 0; i < row_ids.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (size_t k = 0; k < col_ids.size(); ++k)
      row.push_back(get(static_cast<int>(i), static_cast<int>(k)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

std::string rat_str(const Rat& q) {
  std::ostringstream s;
  s << q;
  return s.str();
}

}  // namespace

std::string to_tsv(const Gf2Matrix& m) {
  return tsv(m.row_ids(), m.col_ids(), [&](int i, int j) { return m.at(i, j) ? 1 : 0; });
}

std::string to_tsv(const IntMatrix& m) {
  return tsv(m.row_ids(), m.col_ids(), [&](int i, int j) { return m.at(i, j).str(); });
}

std::string to_tsv(const RatMatrix& m) {
  return tsv(m.row_ids(), m.col_ids(), [&](int i, int j) { return rat_str(m.at(i, j)); });
}

std::string to_hex(const Gf2Matrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    out << m.row_ids()[i] << '\t';
    for (int base = 0; base < m.cols(); base += 4) {
      int digit = 0;
      for (int k = 0; k < 4; ++k)
        if (base + k < m.cols() && m.at(i, base + k)) digit |= 8 >> k;
      out << "0123456789abcdef"[digit];
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Gf2Matrix& m) {
  return json_record(m.row_ids(), m.col_ids(),
                     [&](int i, int j) { return std::string(m.at(i, j) ? "1" : "0"); });
}

std::string to_json(const IntMatrix& m) {
  return json_record(m.row_ids(), m.col_ids(), [&](int i, int j) { return m.at(i, j).str(); });
}

std::string to_json(const RatMatrix& m) {
  return json_record(m.row_ids(), m.col_ids(), [&](int i, int j) { return rat_str(m.at(i, j)); });
}

}  // namespace quartic
