#pragma once

#include <gmpxx.h>

#include <vector>

#include "webcalc/qpoly/laurent.hpp"

namespace webcalc::linalg {

using Matrix = std::vector<std::vector<mpq_class>>;

// Rank over Q by Gaussian elimination; rows may be of any equal length.
size_t rank(Matrix rows);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<size_t> rref(Matrix& rows);

mpq_class evaluate(const qpoly::LaurentPoly& p, const mpq_class& q);

}  // namespace webcalc::linalg
