#include "webcalc/mfcore/ext.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <set>
#include <tuple>
#include <stdexcept>

#include "webcalc/errors.hpp"
#include "webcalc/mfcore/factorizations.hpp"
#include "webcalc/mfcore/reduce.hpp"

namespace webcalc::mf {

using qpoly::LaurentPoly;

namespace {

void monomials_rec(const RingPtr& ring, size_t i, int rem, Exponent& cur, std::vector<Exponent>& out) {
  if (i == ring->size()) {
    if (rem == 0) out.push_back(cur);
    return;
  }
  const int d = ring->var(i).degree;
  for (int e = 0; e * d <= rem; ++e) {
    cur[i] = e;
    monomials_rec(ring, i + 1, rem - e * d, cur, out);
  }
  cur[i] = 0;
}

std::vector<Exponent> monomials_of_degree(const RingPtr& ring, int t) {
  std::vector<Exponent> out;
  if (t < 0) return out;
  Exponent cur(ring->size(), 0);
  monomials_rec(ring, 0, t, cur, out);
  return out;
}

MultiPoly monomial(const RingPtr& ring, const Exponent& e) {
  MultiPoly m(ring);
  m.add_term(e, 1);
  return m;
}

size_t block_rank(const linalg::Matrix& d, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
  if (rows.empty() || cols.empty()) return 0;
  linalg::Matrix sub(rows.size(), std::vector<mpq_class>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) sub[i][j] = d[rows[i]][cols[j]];
  return linalg::rank(std::move(sub));
}

}  // namespace

QuotientAlgebra::QuotientAlgebra(RingPtr ring, std::vector<MultiPoly> relations)
    : ring_(std::move(ring)), relations_(std::move(relations)) {
  for (auto& f : relations_) {
    if (f.is_zero() || !f.degree()) throw std::invalid_argument("QuotientAlgebra: relations must be nonzero and homogeneous");
    f = f.rebase(ring_);
  }
}

QuotientAlgebra::Level& QuotientAlgebra::level(int t) {
  auto it = levels_.find(t);
  if (it != levels_.end()) return it->second;
  Level lv;
  lv.monomials = monomials_of_degree(ring_, t);
  for (size_t i = 0; i < lv.monomials.size(); ++i) lv.index[lv.monomials[i]] = i;
  for (const auto& f : relations_) {
    const int df = *f.degree();
    for (const auto& m : monomials_of_degree(ring_, t - df)) {
      std::vector<mpq_class> v(lv.monomials.size());
      const MultiPoly g = monomial(ring_, m) * f;
      for (const auto& [e, c] : g.terms()) v[lv.index.at(e)] += mpq_class(static_cast<long>(c));
      lv.rows.push_back(std::move(v));
    }
  }
  lv.pivots = linalg::rref(lv.rows);
  std::vector<bool> is_pivot(lv.monomials.size(), false);
  for (size_t p : lv.pivots) is_pivot[p] = true;
  for (size_t i = 0; i < lv.monomials.size(); ++i)
    if (!is_pivot[i]) lv.standard.push_back(lv.monomials[i]);
  return levels_.emplace(t, std::move(lv)).first->second;
}

const std::vector<Exponent>& QuotientAlgebra::standard(int t) { return level(t).standard; }

std::vector<mpq_class> QuotientAlgebra::reduce(const MultiPoly& f, int t) {
  Level& lv = level(t);
  std::vector<mpq_class> v(lv.monomials.size());
  const MultiPoly g = f.rebase(ring_);
  for (const auto& [e, c] : g.terms()) {
    auto it = lv.index.find(e);
    if (it == lv.index.end()) throw std::invalid_argument("QuotientAlgebra::reduce: polynomial not of degree " + std::to_string(t));
    v[it->second] += mpq_class(static_cast<long>(c));
  }
  for (size_t r = 0; r < lv.pivots.size(); ++r) {
    const size_t pc = lv.pivots[r];
    if (v[pc] == 0) continue;
    const mpq_class factor = v[pc];
    for (size_t j = 0; j < v.size(); ++j)
      if (lv.rows[r][j] != 0) v[j] -= factor * lv.rows[r][j];
  }
  std::vector<mpq_class> out;
  out.reserve(lv.standard.size());
  for (const auto& e : lv.standard) out.push_back(v[lv.index.at(e)]);
  return out;
}

bool QuotientAlgebra::finite(int cap, std::vector<int>& degrees) {
  degrees.clear();
  int maxd = 0;
  for (const auto& v : ring_->vars()) maxd = std::max(maxd, v.degree);
  if (maxd == 0) {
    degrees.push_back(0);
    return true;
  }
  int empty_run = 0;
  for (int t = 0; t <= cap; ++t) {
    if (level(t).standard.empty()) {
      ++empty_run;
      if (empty_run >= maxd) return true;
    } else {
      empty_run = 0;
      degrees.push_back(t);
    }
  }
  degrees.clear();
  return false;
}

bool TwoPeriodicComplex::is_complex() const {
  auto compose_zero = [](const linalg::Matrix& a, const linalg::Matrix& b, size_t inner) {
    // a * b == 0 with a: X <- Y (rows X, cols Y), b: Y <- Z.
    for (const auto& row : a) {
      const size_t cols = b.empty() ? 0 : b[0].size();
      for (size_t k = 0; k < cols; ++k) {
        mpq_class s = 0;
        for (size_t j = 0; j < inner; ++j)
          if (row[j] != 0 && b[j][k] != 0) s += row[j] * b[j][k];
        if (s != 0) return false;
      }
    }
    return true;
  };
  return compose_zero(d1, d0, degrees1.size()) && compose_zero(d0, d1, degrees0.size());
}

std::pair<LaurentPoly, LaurentPoly> TwoPeriodicComplex::cohomology() const {
  std::array<const std::vector<int>*, 2> deg{&degrees0, &degrees1};
  std::array<const linalg::Matrix*, 2> out_of{&d0, &d1};  // out_of[c]: C_c -> C_{1-c}
  std::array<LaurentPoly, 2> h;
  std::array<std::map<int, std::vector<size_t>>, 2> by_degree;
  for (int c = 0; c < 2; ++c)
    for (size_t i = 0; i < deg[c]->size(); ++i) by_degree[c][(*deg[c])[i]].push_back(i);
  for (int c = 0; c < 2; ++c) {
    const int o = 1 - c;
    for (const auto& [t, idx] : by_degree[c]) {
      size_t r_out = 0, r_in = 0;
      auto tgt = by_degree[o].find(t + differential_degree);
      if (tgt != by_degree[o].end()) r_out = block_rank(*out_of[c], tgt->second, idx);
      auto src = by_degree[o].find(t - differential_degree);
      if (src != by_degree[o].end()) r_in = block_rank(*out_of[o], idx, src->second);
      const auto dim = static_cast<std::int64_t>(idx.size() - r_out - r_in);
      if (dim != 0) h[c] = h[c] + LaurentPoly::monomial(t, dim);
    }
  }
  return {h[0], h[1]};
}

ExtData homology_data(const KoszulMF& input) {
  if (!total_potential(input).is_zero()) throw std::invalid_argument("homology: potential is not zero");
  ExtData data{reduce(input), {}, {}, {}};
  const KoszulMF& m = data.reduced;
  if (m.zero) return data;
  int qshift = m.qshift, hshift = m.hshift;
  const RingPtr& ring = m.ring;

  // Rows with a zero entry become relations; the rest form a Koszul complex over the quotient.
  struct Entry {
    MultiPoly f;
    int dp, dq;  // degrees after moving f to the q side
  };
  std::vector<Entry> candidates;
  std::vector<Row> other;
  for (const auto& r : m.rows) {
    if (r.p.is_zero() && r.q.is_zero()) {
      other.push_back(r);
    } else if (r.q.is_zero()) {
      qshift += (r.dq - r.dp) / 2;
      hshift ^= 1;
      candidates.push_back({r.p, r.dq, r.dp});
    } else if (r.p.is_zero()) {
      candidates.push_back({r.q, r.dp, r.dq});
    } else {
      other.push_back(r);
    }
  }
  const size_t nv = ring->size();
  if (candidates.size() < nv)
    throw IrreducibleToFinite("reduction stalls with " + std::to_string(nv) + " variables and " + std::to_string(candidates.size()) +
                              " relation candidates");
  int var_degree = 0, maxd = 0;
  for (const auto& v : ring->vars()) {
    var_degree += v.degree;
    maxd = std::max(maxd, v.degree);
  }
  // Pick nv candidates generating a finite-dimensional quotient.
  std::vector<size_t> chosen;
  std::vector<int> algebra_degrees;
  std::unique_ptr<QuotientAlgebra> algebra;
  {
    std::vector<bool> mask(candidates.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(nv), true);
    do {
      std::vector<size_t> pick;
      std::vector<MultiPoly> fs;
      int top = -var_degree;
      for (size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) {
          pick.push_back(i);
          fs.push_back(candidates[i].f);
          top += *candidates[i].f.degree();
        }
      if (top < 0) continue;
      auto qa = std::make_unique<QuotientAlgebra>(ring, fs);
      if (qa->finite(top + maxd, algebra_degrees)) {
        chosen = pick;
        algebra = std::move(qa);
        break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  if (!algebra) throw IrreducibleToFinite("no complete intersection among the residual relations");
  for (size_t i = 0; i < candidates.size(); ++i)
    if (std::find(chosen.begin(), chosen.end(), i) == chosen.end())
      other.push_back({MultiPoly(ring), candidates[i].f, candidates[i].dp, candidates[i].dq});

  const size_t r = other.size();
  if (r > 20) throw IrreducibleToFinite("too many residual rows");
  struct Basis {
    std::uint32_t s;
    int t;
    size_t k;  // index into algebra->standard(t)
  };
  std::array<std::vector<Basis>, 2> basis;
  std::array<std::vector<int>, 2> degrees;
  std::array<std::map<std::tuple<std::uint32_t, int, size_t>, size_t>, 2> index;
  for (std::uint32_t s = 0; s < (1u << r); ++s) {
    int g = 0, comp = 0;
    for (size_t i = 0; i < r; ++i)
      if (s >> i & 1u) {
        g += (other[i].dq - other[i].dp) / 2;
        comp ^= 1;
      }
    for (int t : algebra_degrees) {
      const auto& st = algebra->standard(t);
      for (size_t k = 0; k < st.size(); ++k) {
        index[comp][{s, t, k}] = basis[comp].size();
        basis[comp].push_back({s, t, k});
        degrees[comp].push_back(g + t);
      }
    }
  }
  TwoPeriodicComplex& cx = data.complex;
  cx.differential_degree = m.potential_degree / 2;
  cx.degrees0 = degrees[0];
  cx.degrees1 = degrees[1];
  std::array<linalg::Matrix*, 2> d{&cx.d0, &cx.d1};
  for (int c = 0; c < 2; ++c) {
    *d[c] = linalg::Matrix(basis[1 - c].size(), std::vector<mpq_class>(basis[c].size()));
    for (size_t col = 0; col < basis[c].size(); ++col) {
      const auto& b = basis[c][col];
      const MultiPoly mon = monomial(ring, algebra->standard(b.t)[b.k]);
      int sign = 1;
      for (size_t i = 0; i < r; ++i) {
        const bool in = b.s >> i & 1u;
        const MultiPoly& entry = in ? other[i].q : other[i].p;
        const int de = in ? other[i].dq : other[i].dp;
        if (!entry.is_zero()) {
          const int t2 = b.t + de;
          const std::uint32_t s2 = b.s ^ (1u << i);
          auto coords = algebra->reduce(mon * entry, t2);
          for (size_t k = 0; k < coords.size(); ++k) {
            if (coords[k] == 0) continue;
            const size_t row = index[1 - c].at({s2, t2, k});
            (*d[c])[row][col] += sign * coords[k];
          }
        }
        if (in) sign = -sign;
      }
    }
  }
  auto [h0, h1] = cx.cohomology();
  h0 = h0.shifted(qshift);
  h1 = h1.shifted(qshift);
  if (hshift) std::swap(h0, h1);
  data.dim0 = h0;
  data.dim1 = h1;
  return data;
}

ExtData ext_data(const KoszulMF& a, const KoszulMF& b) {
  // Internal alphabets of the two sides are independent even when the names agree.
  KoszulMF da = dual(a);
  std::set<std::string> theirs;
  for (const auto& v : b.ring->vars()) theirs.insert(v.alphabet);
  std::set<std::string> clashing;
  for (size_t i : internal_variables(da)) {
    const auto& name = da.ring->var(i).alphabet;
    if (!name.empty() && theirs.count(name)) clashing.insert(name);
  }
  for (const auto& name : clashing) da = rename_alphabet(da, name, name + "'");
  KoszulMF c = tensor(da, b);
  if (!total_potential(c).is_zero()) throw std::invalid_argument("ext: the two factorizations have different potentials");
  return homology_data(c);
}

std::pair<LaurentPoly, LaurentPoly> ext_qdim(const KoszulMF& a, const KoszulMF& b) {
  auto d = ext_data(a, b);
  return {d.dim0, d.dim1};
}

}  // namespace webcalc::mf
