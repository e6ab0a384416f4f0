#include "lieperiod/relkernel/relkernel.hpp"

#include "lieperiod/freelie/freelie.hpp"
#include "lieperiod/ihara/derivation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lieperiod::relkernel {

void SparseMatQ::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows || c >= cols) throw std::out_of_range("SparseMatQ::set: index out of range");
  if (v == 0) entries.erase({r, c});
  else entries[{r, c}] = v;
}

Rational SparseMatQ::at(std::size_t r, std::size_t c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Rational(0) : it->second;
}

SparseMatQ from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  SparseMatQ m;
  m.rows = rows.size();
  m.cols = cols;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

std::vector<std::pair<int, int>> odd_pairs(int w) {
  std::vector<std::pair<int, int>> out;
  for (int i = 3; 2 * i < w; i += 2)
    if ((w - i) % 2 == 1) out.emplace_back(i, w - i);
  return out;
}

SparseMatQ bracket_matrix(int w) {
  if (w < 8 || w % 2 != 0) throw std::domain_error("bracket_matrix: weight must be even and >= 8");
  SparseMatQ m;
  m.col_labels = odd_pairs(w);
  m.cols = m.col_labels.size();

  std::vector<NCPoly> columns;
  columns.reserve(m.cols);
  for (const auto& [i, j] : m.col_labels)
    columns.push_back(ihara::ihara_bracket(freelie::phi(i), freelie::phi(j)));

  std::set<freelie::Word> words;
  for (const auto& col : columns)
    for (const auto& [word, c] : col.terms()) words.insert(word);
  m.row_labels.assign(words.begin(), words.end());
  m.rows = m.row_labels.size();

  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [word, value] : columns[c].terms()) {
      const auto row = std::lower_bound(m.row_labels.begin(), m.row_labels.end(), word) - m.row_labels.begin();
      m.set(static_cast<std::size_t>(row), c, value);
    }
  return m;
}

namespace {

struct Echelon {
  std::vector<IntVector> rows;        // first pivots.size() rows are the pivot rows
  std::vector<std::size_t> pivots;    // pivot column of each pivot row
  std::size_t cols = 0;
};

std::vector<IntVector> integer_rows(const SparseMatQ& m) {
  std::vector<std::vector<Rational>> dense(m.rows, std::vector<Rational>(m.cols));
  for (const auto& [rc, v] : m.entries) dense[rc.first][rc.second] = v;
  std::vector<IntVector> out;
  out.reserve(m.rows);
  for (const auto& row : dense) {
    if (std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; })) continue;
    const Integer den = arith::common_denominator(row);
    IntVector r(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) r[c] = Rational(row[c] * den).get_num();
    out.push_back(std::move(r));
  }
  return out;
}

// Single-step Bareiss with row pivoting. Every update divides exactly by the
// previous pivot: the entries are minors of the original integer matrix.
Echelon bareiss(std::vector<IntVector> a, std::size_t cols) {
  Echelon e;
  e.cols = cols;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[r], a[pivot]);
    const Integer& p = a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const Integer factor = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = p * a[i][j] - factor * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

IntVector normalize(const std::vector<Rational>& v) {
  const Integer den = arith::common_denominator(v);
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[k] = Rational(v[k] * den).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[k].get_mpz_t());
  }
  if (g == 0) return out;
  auto last = std::find_if(out.rbegin(), out.rend(), [](const Integer& x) { return x != 0; });
  if (*last < 0) g = -g;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace

std::vector<IntVector> kernel_basis(const SparseMatQ& m) {
  const Echelon e = bareiss(integer_rows(m), m.cols);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(m.cols);
    x[free] = 1;
    for (std::size_t t = e.pivots.size(); t-- > 0;) {
      const std::size_t pc = e.pivots[t];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < m.cols; ++j)
        if (x[j] != 0) acc += Rational(e.rows[t][j]) * x[j];
      x[pc] = -acc / Rational(e.rows[t][pc]);
    }
    basis.push_back(normalize(x));
  }
  return basis;
}

std::size_t rank(const SparseMatQ& m) { return bareiss(integer_rows(m), m.cols).pivots.size(); }

bool in_span(const std::vector<IntVector>& basis, const std::vector<Rational>& v) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& b : basis) {
    if (b.size() != v.size()) throw std::invalid_argument("in_span: dimension mismatch");
    rows.emplace_back(b.begin(), b.end());
  }
  const std::size_t before = rank(from_rows(rows, v.size()));
  rows.push_back(v);
  return rank(from_rows(rows, v.size())) == before;
}

std::vector<Rational> relation_vector(const PairRelation& rel, const std::vector<std::pair<int, int>>& labels) {
  std::vector<Rational> v(labels.size());
  for (const auto& [key, c] : rel.coeffs) {
    auto it = std::find(labels.begin(), labels.end(), key);
    if (it == labels.end())
      throw std::invalid_argument("relation_vector: pair (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ") is not a column");
    v[static_cast<std::size_t>(it - labels.begin())] = c;
  }
  return v;
}

PairRelation kernel_relation(int w, const std::vector<std::pair<int, int>>& labels, const IntVector& v) {
  if (v.size() != labels.size()) throw std::invalid_argument("kernel_relation: dimension mismatch");
  PairRelation rel(w, PairKind::ihara);
  for (std::size_t c = 0; c < v.size(); ++c) rel.add(labels[c].first, labels[c].second, Rational(v[c]));
  return rel;
}

int relation_space_dimension(int w) { return static_cast<int>(kernel_basis(bracket_matrix(w)).size()); }

int cusp_form_dimension(int w) {
  if (w < 4 || w % 2 != 0) throw std::domain_error("cusp_form_dimension: weight must be even and >= 4");
  return w % 12 == 2 ? w / 12 - 1 : w / 12;
}

}  // namespace lieperiod::relkernel
