// The space of linear relations among the Ihara brackets {phi_i, phi_j}
// (i, j odd) at a fixed weight, computed by exact elimination over Q.
#pragma once

#include "lieperiod/arith/rational.hpp"
#include "lieperiod/freelie/word.hpp"
#include "lieperiod/ihara/pair_relation.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace lieperiod::relkernel {

using IntVector = std::vector<Integer>;

struct SparseMatQ {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries;
  /// Column c holds {phi_i, phi_j} for col_labels[c] = (i, j).
  std::vector<std::pair<int, int>> col_labels;
  /// Row r is the coordinate of row_labels[r] (empty for matrices not built
  /// from words).
  std::vector<freelie::Word> row_labels;

  /// Stores v at (r, c); zero values erase the entry.
  void set(std::size_t r, std::size_t c, const Rational& v);
  Rational at(std::size_t r, std::size_t c) const;
};

/// Dense rational rows -> SparseMatQ (no labels).
SparseMatQ from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

/// Odd pairs 3 <= i < j with i + j = w, ordered by i.
std::vector<std::pair<int, int>> odd_pairs(int w);

/// Columns are {phi_i, phi_j} over odd_pairs(w) in word coordinates; rows are
/// the length-w words occurring in some column, in lexicographic order.
/// Requires even w >= 8 (std::domain_error otherwise).
SparseMatQ bracket_matrix(int w);

/// Basis of the right kernel via fraction-free (Bareiss) elimination: each
/// row is cleared to integers, then eliminated with exact integer divisions.
/// One vector per non-pivot column, in column order, scaled to coprime
/// integers with its last nonzero entry positive.
std::vector<IntVector> kernel_basis(const SparseMatQ& m);

/// Rank over Q, by the same elimination.
std::size_t rank(const SparseMatQ& m);

/// True when v is a rational combination of the basis vectors.
bool in_span(const std::vector<IntVector>& basis, const std::vector<Rational>& v);

/// Coefficients of a canonical Ihara relation on the given column labels.
/// Throws std::invalid_argument for a pair outside the labels.
std::vector<Rational> relation_vector(const PairRelation& rel, const std::vector<std::pair<int, int>>& labels);

/// The Ihara relation sum v_c {phi_i, phi_j} for a kernel vector.
PairRelation kernel_relation(int w, const std::vector<std::pair<int, int>>& labels, const IntVector& v);

/// dim ker bracket_matrix(w)
int relation_space_dimension(int w);

/// Dimension of the space of level-one cusp forms of weight w:
/// floor(w/12) - 1 if w = 2 mod 12, floor(w/12) otherwise. Requires even
/// w >= 4 (std::domain_error otherwise).
int cusp_form_dimension(int w);

}  // namespace lieperiod::relkernel
