#pragma once

#include <utility>
#include <vector>

#include "webcalc/qpoly/multipoly.hpp"

namespace webcalc::qpoly {

// p-th power sum of k variables written in e_1..e_k via Newton's identities.
// Ring variables are e1..ek with degrees 2,4,..,2k.
MultiPoly power_sum_in_e(int p, int k);

// Same identity evaluated on given elementary generators e[0] = e_1, ...
MultiPoly power_sum_from(int p, const std::vector<MultiPoly>& e, const RingPtr& ring);

// Degree 2j component of prod_a (1 + e_1 + ... + e_k)^{sign_a}.
// Alphabet a has variables "a<a>.e<b>" of degree 2b.
MultiPoly x_series_component(const std::vector<std::pair<int, int>>& signs_and_sizes, int j);

// Same product on given generator lists, all over one ring.
MultiPoly x_series_from(const std::vector<std::pair<int, std::vector<MultiPoly>>>& alphabets, int j,
                        const RingPtr& ring);

}  // namespace webcalc::qpoly
