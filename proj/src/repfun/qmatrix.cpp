#include "webcalc/repfun/qmatrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace webcalc::repfun {

QMatrix::QMatrix(BasisPtr rows, BasisPtr cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), columns_(cols_->size()) {}

QMatrix QMatrix::identity(BasisPtr basis) {
  QMatrix m(basis, basis);
  for (size_t j = 0; j < basis->size(); ++j) m.columns_[j].emplace_back(j, LaurentPoly(1));
  return m;
}

void QMatrix::set_column(size_t j, Column col) {
  std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Column clean;
  for (auto& [i, p] : col) {
    if (i >= rows_->size()) throw std::out_of_range("QMatrix: row index out of range");
    if (!clean.empty() && clean.back().first == i) throw std::invalid_argument("QMatrix: duplicate row");
    if (!p.is_zero()) clean.emplace_back(i, std::move(p));
  }
  columns_.at(j) = std::move(clean);
}

LaurentPoly QMatrix::entry(size_t i, size_t j) const {
  for (const auto& [r, p] : columns_.at(j))
    if (r == i) return p;
  return {};
}

size_t QMatrix::nonzeros() const {
  size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool QMatrix::is_zero() const { return nonzeros() == 0; }

std::optional<LaurentPoly> QMatrix::scalar_multiple_of_identity() const {
  if (!(*rows_ == *cols_)) return std::nullopt;
  std::optional<LaurentPoly> s;
  for (size_t j = 0; j < columns_.size(); ++j) {
    const auto& c = columns_[j];
    LaurentPoly d;
    for (const auto& [i, p] : c) {
      if (i != j) return std::nullopt;
      d = p;
    }
    if (s && !(*s == d)) return std::nullopt;
    s = d;
  }
  if (!s) s = LaurentPoly();
  return s;
}

QMatrix QMatrix::scaled(const LaurentPoly& c) const {
  QMatrix out(rows_, cols_);
  if (c.is_zero()) return out;
  for (size_t j = 0; j < columns_.size(); ++j)
    for (const auto& [i, p] : columns_[j]) out.columns_[j].emplace_back(i, p * c);
  return out;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (!(*rows_ == *o.rows_) || !(*cols_ == *o.cols_)) throw std::invalid_argument("QMatrix: shape mismatch in sum");
  for (size_t j = 0; j < columns_.size(); ++j) {
    std::map<size_t, LaurentPoly> acc;
    for (const auto& [i, p] : columns_[j]) acc[i] += p;
    for (const auto& [i, p] : o.columns_[j]) acc[i] += p;
    Column c;
    for (auto& [i, p] : acc)
      if (!p.is_zero()) c.emplace_back(i, std::move(p));
    columns_[j] = std::move(c);
  }
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (!(*a.cols_ == *b.rows_)) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix out(a.rows_, b.cols_);
  std::vector<LaurentPoly> acc(a.rows_->size());
  std::vector<size_t> touched;
  std::vector<char> mark(a.rows_->size(), 0);
  for (size_t j = 0; j < b.columns_.size(); ++j) {
    touched.clear();
    for (const auto& [k, bp] : b.columns_[j])
      for (const auto& [i, ap] : a.columns_[k]) {
        if (!mark[i]) {
          mark[i] = 1;
          touched.push_back(i);
        }
        acc[i] += ap * bp;
      }
    std::sort(touched.begin(), touched.end());
    QMatrix::Column c;
    for (size_t i : touched) {
      if (!acc[i].is_zero()) c.emplace_back(i, std::move(acc[i]));
      acc[i] = LaurentPoly();
      mark[i] = 0;
    }
    out.columns_[j] = std::move(c);
  }
  return out;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return *a.rows_ == *b.rows_ && *a.cols_ == *b.cols_ && a.columns_ == b.columns_;
}

std::string QMatrix::dump() const {
  std::string s = "# rows " + rows_->header() + "\n";
  for (size_t i = 0; i < rows_->size(); ++i) s += std::to_string(i) + " " + rows_->legend(i) + "\n";
  s += "# cols " + cols_->header() + "\n";
  for (size_t j = 0; j < cols_->size(); ++j) s += std::to_string(j) + " " + cols_->legend(j) + "\n";
  s += "# entries\n";
  std::vector<std::tuple<size_t, size_t, const LaurentPoly*>> triples;
  for (size_t j = 0; j < columns_.size(); ++j)
    for (const auto& [i, p] : columns_[j]) triples.emplace_back(i, j, &p);
  std::sort(triples.begin(), triples.end(),
            [](const auto& x, const auto& y) { return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y)); });
  for (const auto& [i, j, p] : triples) s += std::to_string(i) + " " + std::to_string(j) + " " + p->to_string() + "\n";
  return s;
}

}  // namespace webcalc::repfun
