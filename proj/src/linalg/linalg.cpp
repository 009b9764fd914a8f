#include "webcalc/linalg.hpp"

#include <utility>

namespace webcalc::linalg {

std::vector<size_t> rref(Matrix& rows) {
  std::vector<size_t> pivots;
  if (rows.empty()) return pivots;
  const size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    mpq_class inv = 1 / rows[r][c];
    for (size_t j = c; j < ncols; ++j)
      if (rows[r][j] != 0) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class f = rows[i][c];
      for (size_t j = c; j < ncols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

size_t rank(Matrix rows) {
  if (rows.empty()) return 0;
  const size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      mpq_class f = rows[i][c] / rows[r][c];
      for (size_t j = c; j < ncols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

mpq_class evaluate(const qpoly::LaurentPoly& p, const mpq_class& q) {
  mpq_class s = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class t = 1;
    mpq_class base = e >= 0 ? q : mpq_class(1 / q);
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) t *= base;
    s += t * mpq_class(static_cast<long>(c));
  }
  return s;
}

}  // namespace webcalc::linalg
