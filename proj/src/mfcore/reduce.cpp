#include "webcalc/mfcore/reduce.hpp"

#include <algorithm>

namespace webcalc::mf {

namespace {

KoszulMF contracted(const KoszulMF& m) {
  KoszulMF out(m.ring);
  out.potential_degree = m.potential_degree;
  out.boundary = m.boundary;
  out.zero = true;
  return out;
}

bool has_unit_entry(const KoszulMF& m) {
  for (const auto& r : m.rows)
    if ((!r.p.is_zero() && r.p.is_constant()) || (!r.q.is_zero() && r.q.is_constant())) return true;
  return false;
}

// Finds x with entry = c x + rest, c = +-1, x internal and not in rest.
bool isolated_variable(const MultiPoly& entry, const std::vector<size_t>& internal, size_t& var, std::int64_t& c) {
  const size_t n = entry.ring()->size();
  for (size_t x : internal) {
    Exponent e(n, 0);
    e[x] = 1;
    std::int64_t cx = entry.coeff(e);
    if (cx != 1 && cx != -1) continue;
    bool elsewhere = false;
    for (const auto& [exp, coef] : entry.terms())
      if (exp != e && exp[x] != 0) {
        elsewhere = true;
        break;
      }
    if (elsewhere) continue;
    var = x;
    c = cx;
    return true;
  }
  return false;
}

KoszulMF drop_variable(const KoszulMF& m, size_t x) {
  std::vector<Variable> vars;
  for (size_t i = 0; i < m.ring->size(); ++i)
    if (i != x) vars.push_back(m.ring->var(i));
  RingPtr ring = qpoly::make_ring(std::move(vars));
  KoszulMF out = m;
  out.ring = ring;
  for (auto& r : out.rows) {
    r.p = r.p.rebase(ring);
    r.q = r.q.rebase(ring);
  }
  return out;
}

bool exclude_once(KoszulMF& m) {
  auto internal = internal_variables(m);
  for (size_t idx = 0; idx < m.rows.size(); ++idx) {
    const Row row = m.rows[idx];
    for (bool on_q : {true, false}) {
      const MultiPoly& entry = on_q ? row.q : row.p;
      if (entry.is_zero()) continue;
      size_t x = 0;
      std::int64_t c = 0;
      if (!isolated_variable(entry, internal, x, c)) continue;
      Exponent e(m.ring->size(), 0);
      e[x] = 1;
      MultiPoly rest = entry;
      rest.add_term(e, -c);
      MultiPoly image = rest.scaled(-c);
      std::vector<Row> rows;
      for (size_t j = 0; j < m.rows.size(); ++j) {
        if (j == idx) continue;
        const auto& r = m.rows[j];
        rows.push_back({r.p.substitute(x, image), r.q.substitute(x, image), r.dp, r.dq});
      }
      m.rows = std::move(rows);
      if (!on_q) {
        m.qshift += (row.dq - row.dp) / 2;
        m.hshift ^= 1;
      }
      m = drop_variable(m, x);
      return true;
    }
  }
  return false;
}

size_t zero_entries(const Row& a, const Row& b) {
  return static_cast<size_t>(a.p.is_zero()) + a.q.is_zero() + b.p.is_zero() + b.q.is_zero();
}

bool normalize_once(KoszulMF& m) {
  for (size_t i = 0; i < m.rows.size(); ++i)
    for (size_t j = 0; j < m.rows.size(); ++j) {
      if (i == j) continue;
      for (bool on_p : {true, false}) {
        const Row& ri = m.rows[i];
        const Row& rj = m.rows[j];
        const MultiPoly& a = on_p ? ri.p : ri.q;
        const MultiPoly& b = on_p ? rj.p : rj.q;
        if (a.is_zero() || b.is_zero() || b.is_constant()) continue;
        MultiPoly lambda(m.ring);
        if (!qpoly::try_divide(a, b, lambda)) continue;
        Row ni = ri, nj = rj;
        if (on_p) {
          ni.p = MultiPoly(m.ring);
          nj.q = rj.q + lambda * ri.q;
        } else {
          ni.q = MultiPoly(m.ring);
          nj.p = rj.p + lambda * ri.p;
        }
        if (zero_entries(ni, nj) <= zero_entries(ri, rj)) continue;
        m.rows[i] = std::move(ni);
        m.rows[j] = std::move(nj);
        return true;
      }
    }
  return false;
}

}  // namespace

KoszulMF exclude_variables(const KoszulMF& m) {
  if (m.zero) return m;
  KoszulMF out = m;
  while (true) {
    if (has_unit_entry(out)) return contracted(out);
    if (!exclude_once(out)) break;
  }
  return out;
}

KoszulMF normalize_rows(const KoszulMF& m) {
  if (m.zero) return m;
  KoszulMF out = m;
  while (normalize_once(out)) {
  }
  return out;
}

KoszulMF reduce(const KoszulMF& m) {
  KoszulMF out = exclude_variables(m);
  while (!out.zero) {
    bool changed = false;
    KoszulMF n = out;
    if (normalize_once(n)) {
      changed = true;
      while (normalize_once(n)) {
      }
    }
    if (!changed) break;
    out = exclude_variables(n);
  }
  return out;
}

}  // namespace webcalc::mf
