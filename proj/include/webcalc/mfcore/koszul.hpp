#pragma once

#include <string>
#include <vector>

#include "webcalc/qpoly/multipoly.hpp"

namespace webcalc::mf {

using qpoly::Exponent;
using qpoly::MultiPoly;
using qpoly::RingPtr;
using qpoly::Variable;
using GradedRing = qpoly::Ring;

enum class Role { Top, Bottom };

struct BoundaryAlphabet {
  std::string name;
  int size = 0;
  Role role = Role::Top;
  friend bool operator==(const BoundaryAlphabet&, const BoundaryAlphabet&) = default;
};

// One Koszul row K(p; q).  The formal degrees are kept even when an entry is zero.
struct Row {
  MultiPoly p, q;
  int dp = 0, dq = 0;
};

struct KoszulMF {
  RingPtr ring;
  std::vector<Row> rows;
  int qshift = 0;
  int hshift = 0;  // 0 or 1
  std::vector<int> basemodule{0};
  int potential_degree = 0;
  std::vector<BoundaryAlphabet> boundary;
  // Homotopy equivalent to the zero factorization.
  bool zero = false;

  explicit KoszulMF(RingPtr r) : ring(std::move(r)) {}
};

// Variables e1(name) .. ek(name) of degrees 2, .., 2k tagged with the alphabet.
std::vector<Variable> alphabet_variables(const std::string& name, int size);
// Generators of an alphabet over a ring containing its variables.
std::vector<MultiPoly> alphabet_generators(const RingPtr& ring, const std::string& name, int size);

KoszulMF koszul(const MultiPoly& p, const MultiPoly& q);
KoszulMF koszul(const MultiPoly& p, const MultiPoly& q, int dp, int dq);

KoszulMF tensor(const KoszulMF& a, const KoszulMF& b);
KoszulMF shift_q(const KoszulMF& m, int t);
KoszulMF shift_h(const KoszulMF& m);
// Row-wise dual K(-q; p); the grading is dualized over the boundary ring, so every
// variable outside the boundary alphabets contributes {deg - potential/2}<1>.
KoszulMF dual(const KoszulMF& m);

// Variables not belonging to a boundary alphabet.
std::vector<size_t> internal_variables(const KoszulMF& m);
MultiPoly total_potential(const KoszulMF& m);
// P_{N+1} of the top alphabets minus that of the bottom ones.
MultiPoly boundary_potential(const KoszulMF& m);
bool check_potential(const KoszulMF& m);

std::string dump(const KoszulMF& m);

}  // namespace webcalc::mf
