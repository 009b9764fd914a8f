#pragma once

#include "webcalc/mfcore/koszul.hpp"

namespace webcalc::mf {

// Exclusion of variables to a fixpoint: a nonzero scalar entry contracts the whole
// factorization; an entry +-x + g with x internal and absent from g removes its row
// and substitutes x away.  Eliminated variables leave the ring.
KoszulMF exclude_variables(const KoszulMF& m);

// Row operations K(p_i;q_i) K(p_j;q_j) -> K(0;q_i) K(p_j;q_j + l q_i) when p_i = l p_j
// (and symmetrically on the q side), applied only when they create zero entries.
KoszulMF normalize_rows(const KoszulMF& m);

// Alternates the two steps above until neither changes anything.
KoszulMF reduce(const KoszulMF& m);

}  // namespace webcalc::mf
