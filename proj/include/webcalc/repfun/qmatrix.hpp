#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "webcalc/qpoly/laurent.hpp"
#include "webcalc/repfun/fock.hpp"

namespace webcalc::repfun {

using qpoly::LaurentPoly;

// Sparse matrix with Laurent polynomial entries, stored by column.
class QMatrix {
 public:
  using Column = std::vector<std::pair<size_t, LaurentPoly>>;  // sorted by row, no zeros

  QMatrix(BasisPtr rows, BasisPtr cols);
  static QMatrix identity(BasisPtr basis);

  const BasisPtr& rows() const { return rows_; }
  const BasisPtr& cols() const { return cols_; }
  const Column& column(size_t j) const { return columns_[j]; }
  // Replaces column j; entries must be distinct rows.
  void set_column(size_t j, Column col);
  LaurentPoly entry(size_t i, size_t j) const;
  size_t nonzeros() const;
  bool is_zero() const;
  // s if this matrix is s times the identity.
  std::optional<LaurentPoly> scalar_multiple_of_identity() const;

  QMatrix scaled(const LaurentPoly& c) const;
  QMatrix& operator+=(const QMatrix& o);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + b.scaled(-1); }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

  // Coordinate dump with basis legends.
  std::string dump() const;

 private:
  BasisPtr rows_, cols_;
  std::vector<Column> columns_;
};

}  // namespace webcalc::repfun
