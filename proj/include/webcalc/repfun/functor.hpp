#pragma once

#include <optional>
#include <vector>

#include "webcalc/qpoly/laurent.hpp"
#include "webcalc/repfun/fock.hpp"
#include "webcalc/repfun/qmatrix.hpp"
#include "webcalc/webs/ladder.hpp"

namespace webcalc::repfun {

struct WedgeForm {
  LaurentPoly coeff;
  std::vector<int> subset;
};

// Sorts a word of basis indices in the quantum exterior algebra:
// each inversion contributes -q^-1; a repeated index gives nullopt (zero).
std::optional<WedgeForm> wedge_normal_form(const std::vector<int>& word);

// Lambda^a (x) Lambda^b -> Lambda^{a+b}.
QMatrix merge_matrix(int a, int b, int N);
// Lambda^{a+b} -> Lambda^a (x) Lambda^b, normalized so that merge * split = [a+b, a].
QMatrix split_matrix(int a, int b, int N);

enum class Generator { E, F, K };

// U_q(sl_N) generator i acting on a tensor product of exterior powers.
QMatrix qg_action(int i, Generator g, const BasisPtr& basis);

QMatrix rung_matrix(const webs::Rung& r, const webs::GlWeight& k);
QMatrix ladder_matrix(const webs::Ladder& u);
QMatrix combination_matrix(const webs::WebLinComb& w);

LaurentPoly ev_closed(const webs::Ladder& u);
LaurentPoly web_form(const webs::Ladder& u, const webs::Ladder& v);
// Web form of all pairs; ladders share base (a highest weight) and top.
std::vector<std::vector<LaurentPoly>> gram_matrix(const std::vector<webs::Ladder>& ladders);

}  // namespace webcalc::repfun
