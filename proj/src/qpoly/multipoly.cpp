#include "webcalc/qpoly/multipoly.hpp"

#include <sstream>
#include <stdexcept>

#include "webcalc/errors.hpp"
#include "webcalc/qpoly/laurent.hpp"

namespace webcalc::qpoly {

Ring::Ring(std::vector<Variable> vars) : vars_(std::move(vars)) {
  for (size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.degree <= 0 || v.degree % 2 != 0)
      throw std::invalid_argument("variable " + v.name + " must have even positive degree");
    if (!index_.emplace(v.name, i).second) throw std::invalid_argument("duplicate variable " + v.name);
  }
}

std::optional<size_t> Ring::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t Ring::index_of(const std::string& name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown variable " + name);
  return *i;
}

RingPtr make_ring(std::vector<Variable> vars) { return std::make_shared<const Ring>(std::move(vars)); }

RingPtr ring_union(const RingPtr& a, const RingPtr& b) {
  if (same_ring(a, b)) return a;
  std::vector<Variable> vars = a->vars();
  bool grew = false;
  for (const auto& v : b->vars()) {
    if (auto i = a->find(v.name)) {
      if (a->var(*i).degree != v.degree)
        throw AlphabetCollision("variable " + v.name + " has conflicting degrees");
      continue;
    }
    vars.push_back(v);
    grew = true;
  }
  if (!grew) return a;
  return make_ring(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

namespace {

void require_same(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("polynomials over different rings");
}

}  // namespace

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

MultiPoly::MultiPoly(RingPtr ring, std::int64_t c) : ring_(std::move(ring)) {
  if (c != 0) terms_.emplace(Exponent(ring_->size(), 0), c);
}

MultiPoly MultiPoly::variable(RingPtr ring, size_t i) {
  MultiPoly p(ring);
  Exponent e(ring->size(), 0);
  e.at(i) = 1;
  p.terms_.emplace(std::move(e), 1);
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, const std::string& name) {
  size_t i = ring->index_of(name);
  return variable(std::move(ring), i);
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (int x : terms_.begin()->first)
    if (x != 0) return false;
  return true;
}

std::int64_t MultiPoly::constant_term() const { return coeff(Exponent(ring_->size(), 0)); }

std::int64_t MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Exponent& e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

int MultiPoly::monomial_degree(const Exponent& e) const {
  int d = 0;
  for (size_t i = 0; i < e.size(); ++i) d += e[i] * ring_->var(i).degree;
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = monomial_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (monomial_degree(e) != d) return false;
  return true;
}

std::optional<int> MultiPoly::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return monomial_degree(terms_.begin()->first);
}

bool MultiPoly::uses(size_t var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] != 0) return true;
  return false;
}

std::vector<size_t> MultiPoly::used_variables() const {
  std::vector<bool> seen(ring_->size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) seen[i] = true;
  std::vector<size_t> out;
  for (size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same(ring_, o.ring_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same(ring_, o.ring_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same(a.ring_, b.ring_);
  MultiPoly out(a.ring_);
  Exponent e(a.ring_->size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, checked_mul(ca, cb));
    }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::scaled(std::int64_t c) const {
  MultiPoly out(ring_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, checked_mul(v, c));
  return out;
}

MultiPoly MultiPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  MultiPoly out(ring_, 1);
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

MultiPoly MultiPoly::substitute(size_t var, const MultiPoly& g) const {
  require_same(ring_, g.ring_);
  std::vector<MultiPoly> powers{MultiPoly(ring_, 1)};
  MultiPoly out(ring_);
  for (const auto& [e, c] : terms_) {
    int k = e[var];
    if (k == 0) {
      out.add_term(e, c);
      continue;
    }
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * g);
    Exponent rest = e;
    rest[var] = 0;
    MultiPoly mono(ring_);
    mono.terms_.emplace(std::move(rest), c);
    out += mono * powers[static_cast<size_t>(k)];
  }
  return out;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images, const RingPtr& target) const {
  if (images.size() != ring_->size()) throw std::invalid_argument("compose: wrong number of images");
  std::vector<std::vector<MultiPoly>> powers(images.size());
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term(target, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.emplace_back(target, 1);
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i].rebase(target));
      term = term * pw[static_cast<size_t>(e[i])];
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::rebase(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    MultiPoly out = *this;
    out.ring_ = target;
    return out;
  }
  std::vector<std::optional<size_t>> map(ring_->size());
  for (size_t i = 0; i < ring_->size(); ++i) map[i] = target->find(ring_->var(i).name);
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    Exponent ne(target->size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!map[i]) throw std::invalid_argument("rebase: variable " + ring_->var(i).name + " missing");
      ne[*map[i]] = e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

std::int64_t MultiPoly::evaluate(const std::vector<std::int64_t>& values) const {
  if (values.size() != ring_->size()) throw std::invalid_argument("evaluate: wrong number of values");
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t = checked_mul(t, values[i]);
    s = checked_add(s, t);
  }
  return s;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any = false;
    std::ostringstream mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      mono << ring_->var(i).name;
      if (e[i] != 1) mono << "^" << e[i];
      any = true;
    }
    if (!any) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << mono.str();
    }
  }
  return os.str();
}

bool try_divide(const MultiPoly& num, const MultiPoly& den, MultiPoly& out) {
  require_same(num.ring(), den.ring());
  if (den.is_zero()) throw std::domain_error("exact_divide: zero divisor");
  out = MultiPoly(num.ring());
  MultiPoly rem = num;
  // Leading terms in lexicographic order (the map order): the last entry.
  const auto& [lead_e, lead_c] = *den.terms().rbegin();
  const size_t n = num.ring()->size();
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    Exponent qe(n);
    for (size_t i = 0; i < n; ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < 0) return false;
    }
    if (rc % lead_c != 0) return false;
    MultiPoly t(num.ring());
    t.add_term(qe, rc / lead_c);
    out += t;
    rem -= t * den;
  }
  return true;
}

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
  MultiPoly out(num.ring());
  if (!try_divide(num, den, out))
    throw NonExactDivision("(" + num.to_string() + ") / (" + den.to_string() + ") leaves a remainder");
  return out;
}

}  // namespace webcalc::qpoly
