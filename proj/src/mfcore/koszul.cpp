#include "webcalc/mfcore/koszul.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "webcalc/errors.hpp"
#include "webcalc/qpoly/symmetric.hpp"

namespace webcalc::mf {

std::vector<Variable> alphabet_variables(const std::string& name, int size) {
  std::vector<Variable> out;
  for (int j = 1; j <= size; ++j) out.push_back({"e" + std::to_string(j) + "(" + name + ")", 2 * j, name, j});
  return out;
}

std::vector<MultiPoly> alphabet_generators(const RingPtr& ring, const std::string& name, int size) {
  std::vector<MultiPoly> out;
  for (const auto& v : alphabet_variables(name, size)) out.push_back(MultiPoly::variable(ring, v.name));
  return out;
}

KoszulMF koszul(const MultiPoly& p, const MultiPoly& q, int dp, int dq) {
  if (!qpoly::same_ring(p.ring(), q.ring())) throw std::invalid_argument("koszul: entries over different rings");
  if (!p.is_zero() && p.degree() != dp) throw std::invalid_argument("koszul: p is not homogeneous of degree " + std::to_string(dp));
  if (!q.is_zero() && q.degree() != dq) throw std::invalid_argument("koszul: q is not homogeneous of degree " + std::to_string(dq));
  if ((dq - dp) % 2 != 0) throw std::invalid_argument("koszul: degrees must have even difference");
  KoszulMF m(p.ring());
  m.rows.push_back({p, q, dp, dq});
  m.potential_degree = dp + dq;
  return m;
}

KoszulMF koszul(const MultiPoly& p, const MultiPoly& q) {
  auto dp = p.is_zero() ? std::optional<int>(0) : p.degree();
  auto dq = q.is_zero() ? std::optional<int>(0) : q.degree();
  if (!dp || !dq) throw std::invalid_argument("koszul: inhomogeneous entry");
  return koszul(p, q, *dp, *dq);
}

KoszulMF tensor(const KoszulMF& a, const KoszulMF& b) {
  if (!a.rows.empty() && !b.rows.empty() && a.potential_degree != b.potential_degree)
    throw std::invalid_argument("tensor: potentials of different degrees");
  // Glue boundary alphabets: a name that is top on one side and bottom on the other becomes internal.
  std::vector<BoundaryAlphabet> boundary;
  std::set<std::string> glued;
  for (const auto& x : a.boundary) {
    auto it = std::find_if(b.boundary.begin(), b.boundary.end(), [&](const auto& y) { return y.name == x.name; });
    if (it == b.boundary.end()) {
      boundary.push_back(x);
      continue;
    }
    if (it->size != x.size) throw AlphabetCollision("alphabet " + x.name + " has sizes " + std::to_string(x.size) + " and " + std::to_string(it->size));
    if (it->role == x.role) throw AlphabetCollision("alphabet " + x.name + " appears twice on the same side");
    glued.insert(x.name);
  }
  for (const auto& y : b.boundary)
    if (!glued.count(y.name)) boundary.push_back(y);
  // An internal alphabet of one factor must not collide with anything in the other.
  auto names_of = [](const KoszulMF& m) {
    std::set<std::string> s;
    for (const auto& v : m.ring->vars()) s.insert(v.alphabet);
    return s;
  };
  auto is_boundary = [](const KoszulMF& m, const std::string& name) {
    return std::any_of(m.boundary.begin(), m.boundary.end(), [&](const auto& x) { return x.name == name; });
  };
  auto sa = names_of(a), sb = names_of(b);
  // Plain Koszul rows without boundary data may share one ring freely.
  if (!a.boundary.empty() && !b.boundary.empty())
    for (const auto& n : sa)
      if (!n.empty() && sb.count(n) && !(is_boundary(a, n) && is_boundary(b, n)))
          throw AlphabetCollision("internal alphabet " + n + " shared between factors");

  RingPtr ring = qpoly::ring_union(a.ring, b.ring);
  KoszulMF out(ring);
  for (const auto* m : {&a, &b})
    for (const auto& r : m->rows) out.rows.push_back({r.p.rebase(ring), r.q.rebase(ring), r.dp, r.dq});
  out.qshift = a.qshift + b.qshift;
  out.hshift = (a.hshift + b.hshift) % 2;
  out.potential_degree = a.rows.empty() ? b.potential_degree : a.potential_degree;
  out.boundary = std::move(boundary);
  out.zero = a.zero || b.zero;
  std::vector<int> base;
  for (int x : a.basemodule)
    for (int y : b.basemodule) base.push_back(x + y);
  std::sort(base.begin(), base.end());
  out.basemodule = base;
  return out;
}

KoszulMF shift_q(const KoszulMF& m, int t) {
  KoszulMF out = m;
  out.qshift += t;
  return out;
}

KoszulMF shift_h(const KoszulMF& m) {
  KoszulMF out = m;
  out.hshift ^= 1;
  return out;
}

std::vector<size_t> internal_variables(const KoszulMF& m) {
  std::vector<size_t> out;
  for (size_t i = 0; i < m.ring->size(); ++i) {
    const auto& v = m.ring->var(i);
    bool bnd = std::any_of(m.boundary.begin(), m.boundary.end(), [&](const auto& b) { return b.name == v.alphabet; });
    if (!bnd) out.push_back(i);
  }
  return out;
}

KoszulMF dual(const KoszulMF& m) {
  KoszulMF out(m.ring);
  for (const auto& r : m.rows) out.rows.push_back({-r.q, r.p, r.dq, r.dp});
  out.qshift = -m.qshift;
  out.hshift = m.hshift;
  for (size_t i : internal_variables(m)) {
    out.qshift += m.ring->var(i).degree - m.potential_degree / 2;
    out.hshift ^= 1;
  }
  out.potential_degree = m.potential_degree;
  for (auto b : m.boundary) {
    b.role = b.role == Role::Top ? Role::Bottom : Role::Top;
    out.boundary.push_back(b);
  }
  out.basemodule.clear();
  for (int x : m.basemodule) out.basemodule.push_back(-x);
  std::sort(out.basemodule.begin(), out.basemodule.end());
  out.zero = m.zero;
  return out;
}

MultiPoly total_potential(const KoszulMF& m) {
  MultiPoly s(m.ring);
  for (const auto& r : m.rows)
    if (!r.p.is_zero() && !r.q.is_zero()) s += r.p * r.q;
  return s;
}

MultiPoly boundary_potential(const KoszulMF& m) {
  MultiPoly s(m.ring);
  const int p = m.potential_degree / 2;
  for (const auto& b : m.boundary) {
    if (b.size == 0) continue;
    auto gens = alphabet_generators(m.ring, b.name, b.size);
    MultiPoly pb = qpoly::power_sum_from(p, gens, m.ring);
    s += b.role == Role::Top ? pb : -pb;
  }
  return s;
}

bool check_potential(const KoszulMF& m) {
  for (const auto& r : m.rows)
    if (r.dp + r.dq != m.potential_degree) return false;
  return total_potential(m) == boundary_potential(m);
}

std::string dump(const KoszulMF& m) {
  std::string s = "ring\n";
  for (const auto& v : m.ring->vars())
    s += "  " + v.name + ": " + std::to_string(v.degree) + " [" + v.alphabet + " " + std::to_string(v.index) + "]\n";
  s += "boundary\n";
  for (const auto& b : m.boundary)
    s += "  " + b.name + " size=" + std::to_string(b.size) + (b.role == Role::Top ? " top" : " bottom") + "\n";
  s += "rows\n";
  for (const auto& r : m.rows) s += "  " + r.p.to_string() + " ; " + r.q.to_string() + "\n";
  s += "qshift " + std::to_string(m.qshift) + "\n";
  s += "hshift " + std::to_string(m.hshift) + "\n";
  if (m.zero) s += "contractible\n";
  return s;
}

}  // namespace webcalc::mf
