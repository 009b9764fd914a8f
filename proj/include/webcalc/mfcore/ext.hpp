#pragma once

#include <map>
#include <utility>
#include <vector>

#include "webcalc/linalg.hpp"
#include "webcalc/mfcore/koszul.hpp"
#include "webcalc/qpoly/laurent.hpp"

namespace webcalc::mf {

// Graded algebra Q[vars]/(f_1..f_r) with the f_i a complete intersection.
class QuotientAlgebra {
 public:
  QuotientAlgebra(RingPtr ring, std::vector<MultiPoly> relations);

  const RingPtr& ring() const { return ring_; }
  // Standard monomials of degree t (exponent vectors over the ring).
  const std::vector<Exponent>& standard(int t);
  // Coordinates of a homogeneous polynomial of degree t on standard(t).
  std::vector<mpq_class> reduce(const MultiPoly& f, int t);
  // Degrees carrying a nonzero space, ascending; empty when not finite below the cap.
  bool finite(int cap, std::vector<int>& degrees);

 private:
  struct Level {
    std::vector<Exponent> monomials;
    std::map<Exponent, size_t> index;
    linalg::Matrix rows;
    std::vector<size_t> pivots;
    std::vector<Exponent> standard;
  };
  Level& level(int t);

  RingPtr ring_;
  std::vector<MultiPoly> relations_;
  std::map<int, Level> levels_;
};

struct TwoPeriodicComplex {
  // q-degrees of the basis vectors of C0 and C1.
  std::vector<int> degrees0, degrees1;
  // d0: C0 -> C1 and d1: C1 -> C0, row-major (rows index the target).
  linalg::Matrix d0, d1;
  int differential_degree = 0;

  bool is_complex() const;
  // Graded dimensions of H0 and H1 (before any outer shift).
  std::pair<qpoly::LaurentPoly, qpoly::LaurentPoly> cohomology() const;
};

struct ExtData {
  KoszulMF reduced;
  TwoPeriodicComplex complex;
  qpoly::LaurentPoly dim0, dim1;
};

// Throws IrreducibleToFinite when the reduction does not reach a finite complex.
ExtData ext_data(const KoszulMF& a, const KoszulMF& b);
std::pair<qpoly::LaurentPoly, qpoly::LaurentPoly> ext_qdim(const KoszulMF& a, const KoszulMF& b);

// Cohomology of a single factorization with zero potential.
ExtData homology_data(const KoszulMF& m);

}  // namespace webcalc::mf
