#include "webcalc/repfun/functor.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "webcalc/errors.hpp"

namespace webcalc::repfun {

namespace {

using qpoly::qbinom;
using webs::GlWeight;
using webs::Ladder;
using webs::Rung;
using webs::Sign;

Subset bit(int i) { return Subset{1} << (i - 1); }
bool has(Subset s, int i) { return (s & bit(i)) != 0; }

// Coefficient of x_S x_T -> x_{S u T}; nullopt when S and T meet.
std::optional<LaurentPoly> merge_coeff(Subset s, Subset t) {
  if (s & t) return std::nullopt;
  int inv = 0;
  for (Subset rest = t; rest != 0; rest &= rest - 1) {
    Subset low = rest & (~rest + 1);
    // members of s above this member of t
    inv += std::popcount(s & ~((low << 1) - 1));
  }
  return LaurentPoly::monomial(-inv, inv % 2 ? -1 : 1);
}

int k_exponent(Subset s, int i) { return (has(s, i) ? 1 : 0) - (has(s, i + 1) ? 1 : 0); }

using Vec = std::map<Element, LaurentPoly>;

void vec_add(Vec& v, const Element& e, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

// E_i or F_i on a tensor of wedges via the coproduct
// E -> E (x) K + 1 (x) E, F -> F (x) 1 + K^-1 (x) F.
void apply_generator(const Element& e, const LaurentPoly& c, int i, Generator g, Vec& out) {
  const size_t m = e.size();
  if (g == Generator::K) {
    int x = 0;
    for (Subset s : e) x += k_exponent(s, i);
    vec_add(out, e, c.shifted(x));
    return;
  }
  for (size_t p = 0; p < m; ++p) {
    Subset s = e[p];
    int from = g == Generator::E ? i + 1 : i;
    int to = g == Generator::E ? i : i + 1;
    if (!has(s, from) || has(s, to)) continue;
    int x = 0;
    if (g == Generator::E) {
      for (size_t t = p + 1; t < m; ++t) x += k_exponent(e[t], i);
    } else {
      for (size_t t = 0; t < p; ++t) x -= k_exponent(e[t], i);
    }
    Element f = e;
    f[p] = (s & ~bit(from)) | bit(to);
    vec_add(out, f, c.shifted(x));
  }
}

struct SplitTerm {
  Subset first, second;
  LaurentPoly coeff;
};

using SplitKey = std::tuple<Subset, int, int, int>;

std::recursive_mutex split_mutex;
std::map<SplitKey, std::vector<SplitTerm>> split_cache;

std::vector<SplitTerm> to_terms(const Vec& v) {
  std::vector<SplitTerm> out;
  for (const auto& [e, c] : v) out.push_back({e[0], e[1], c});
  return out;
}

// Image of x_S under the split Lambda^{a+b} -> Lambda^a (x) Lambda^b.
const std::vector<SplitTerm>& split_single(Subset S, int a, int b, int N) {
  std::lock_guard<std::recursive_mutex> lock(split_mutex);
  SplitKey key{S, a, b, N};
  if (auto it = split_cache.find(key); it != split_cache.end()) return it->second;
  const int n = a + b;
  const Subset S0 = (Subset{1} << n) - 1;
  Vec result;
  if (S == S0) {
    // Highest weight vector: solve E_i v = 0 along adjacent transpositions.
    std::map<std::pair<Subset, Subset>, LaurentPoly> coef;
    const Subset T0 = (Subset{1} << a) - 1;
    coef[{T0, S0 & ~T0}] = LaurentPoly(1);
    std::vector<std::pair<Subset, Subset>> frontier{{T0, S0 & ~T0}};
    while (!frontier.empty()) {
      auto [T, U] = frontier.back();
      frontier.pop_back();
      for (int i = 1; i < n; ++i) {
        if (has(T, i) == has(T, i + 1)) continue;
        Subset swap = bit(i) | bit(i + 1);
        std::pair<Subset, Subset> next{T ^ swap, U ^ swap};
        if (coef.count(next)) continue;
        Vec v1, v2;
        apply_generator({T, U}, coef[{T, U}], i, Generator::E, v1);
        apply_generator({next.first, next.second}, LaurentPoly(1), i, Generator::E, v2);
        const Element* common = nullptr;
        for (const auto& [t, c] : v1)
          if (v2.count(t)) {
            common = &t;
            break;
          }
        if (!common) throw std::logic_error("split: no common component while propagating");
        coef[next] = divide_exact(-v1.at(*common), v2.at(*common));
        frontier.push_back(next);
      }
    }
    LaurentPoly c;
    for (const auto& [tu, x] : coef) {
      auto w = merge_coeff(tu.first, tu.second);
      if (w) c += *w * x;
    }
    LaurentPoly scale = divide_exact(qbinom(n, a), c);
    for (const auto& [tu, x] : coef) vec_add(result, {tu.first, tu.second}, x * scale);
  } else {
    // x_S = F_i x_S' for S' = S - (i+1) + i; the single-factor coefficient is 1.
    int i = 1;
    while (i < N && !(has(S, i + 1) && !has(S, i))) ++i;
    if (i >= N) throw std::logic_error("split: no lowering path");
    Subset Sp = (S & ~bit(i + 1)) | bit(i);
    const auto& parent = split_single(Sp, a, b, N);
    for (const auto& t : parent) apply_generator({t.first, t.second}, t.coeff, i, Generator::F, result);
  }
  return split_cache.emplace(key, to_terms(result)).first->second;
}

std::mutex rung_mutex;
std::map<std::tuple<int, int, int, std::vector<int>, int>, QMatrix> rung_cache;

}  // namespace

std::optional<WedgeForm> wedge_normal_form(const std::vector<int>& word) {
  int inv = 0;
  for (size_t i = 0; i < word.size(); ++i)
    for (size_t j = i + 1; j < word.size(); ++j) {
      if (word[i] == word[j]) return std::nullopt;
      if (word[i] > word[j]) ++inv;
    }
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  return WedgeForm{LaurentPoly::monomial(-inv, inv % 2 ? -1 : 1), sorted};
}

QMatrix merge_matrix(int a, int b, int N) {
  if (a < 0 || b < 0 || a + b > N) throw std::invalid_argument("merge_matrix: need 0 <= a, b and a+b <= N");
  BasisPtr src = fock_basis(N, {a, b});
  BasisPtr dst = fock_basis(N, {a + b});
  QMatrix m(dst, src);
  for (size_t j = 0; j < src->size(); ++j) {
    const Element& e = src->element(j);
    if (auto c = merge_coeff(e[0], e[1])) m.set_column(j, {{dst->index_of({e[0] | e[1]}), *c}});
  }
  return m;
}

QMatrix split_matrix(int a, int b, int N) {
  if (a < 0 || b < 0 || a + b > N) throw std::invalid_argument("split_matrix: need 0 <= a, b and a+b <= N");
  BasisPtr src = fock_basis(N, {a + b});
  BasisPtr dst = fock_basis(N, {a, b});
  QMatrix m(dst, src);
  for (size_t j = 0; j < src->size(); ++j) {
    QMatrix::Column col;
    for (const auto& t : split_single(src->element(j)[0], a, b, N)) col.emplace_back(dst->index_of({t.first, t.second}), t.coeff);
    m.set_column(j, std::move(col));
  }
  return m;
}

QMatrix qg_action(int i, Generator g, const BasisPtr& basis) {
  if (i < 1 || i >= basis->N()) throw std::invalid_argument("qg_action: index outside [1, N-1]");
  QMatrix m(basis, basis);
  for (size_t j = 0; j < basis->size(); ++j) {
    Vec out;
    apply_generator(basis->element(j), LaurentPoly(1), i, g, out);
    QMatrix::Column col;
    for (const auto& [e, c] : out) col.emplace_back(basis->index_of(e), c);
    m.set_column(j, std::move(col));
  }
  return m;
}

QMatrix rung_matrix(const Rung& r, const GlWeight& k) {
  auto target = webs::apply_rung(k, r);
  if (!target) throw ZeroWeight("rung " + r.to_string() + " is not defined on " + k.to_string());
  const int N = k.N();
  auto key = std::make_tuple(r.pos, static_cast<int>(r.sign), r.thickness, k.k(), N);
  {
    std::lock_guard<std::mutex> lock(rung_mutex);
    if (auto it = rung_cache.find(key); it != rung_cache.end()) return it->second;
  }
  BasisPtr src = fock_basis(N, k.k());
  BasisPtr dst = fock_basis(N, target->k());
  QMatrix m(dst, src);
  const size_t left = static_cast<size_t>(r.pos - 1), right = left + 1;
  const int a = r.thickness;
  for (size_t j = 0; j < src->size(); ++j) {
    const Element& e = src->element(j);
    Vec out;
    if (r.sign == Sign::Plus) {
      // split the right factor into (a, rest), merge the a-part into the left factor
      for (const auto& t : split_single(e[right], a, k[static_cast<int>(right)] - a, N)) {
        auto w = merge_coeff(e[left], t.first);
        if (!w) continue;
        Element f = e;
        f[left] = e[left] | t.first;
        f[right] = t.second;
        vec_add(out, f, *w * t.coeff);
      }
    } else {
      for (const auto& t : split_single(e[left], k[static_cast<int>(left)] - a, a, N)) {
        auto w = merge_coeff(t.second, e[right]);
        if (!w) continue;
        Element f = e;
        f[left] = t.first;
        f[right] = t.second | e[right];
        vec_add(out, f, *w * t.coeff);
      }
    }
    QMatrix::Column col;
    for (const auto& [f, c] : out) col.emplace_back(dst->index_of(f), c);
    m.set_column(j, std::move(col));
  }
  std::lock_guard<std::mutex> lock(rung_mutex);
  rung_cache.emplace(key, m);
  return m;
}

QMatrix ladder_matrix(const Ladder& u) {
  QMatrix cur = QMatrix::identity(fock_basis(u.N(), u.base().k()));
  for (size_t i = 0; i < u.rungs().size(); ++i) cur = rung_matrix(u.rungs()[i], u.levels()[i]) * cur;
  return cur;
}

QMatrix combination_matrix(const webs::WebLinComb& w) {
  if (w.is_zero()) throw std::invalid_argument("combination_matrix: empty combination has no boundary");
  std::optional<QMatrix> acc;
  for (const auto& [u, c] : w.terms()) {
    QMatrix t = ladder_matrix(u).scaled(c);
    if (acc) {
      *acc += t;
    } else {
      acc = std::move(t);
    }
  }
  return *acc;
}

LaurentPoly ev_closed(const Ladder& u) {
  if (!(u.base() == u.top()))
    throw NotEndomorphism("ev_closed: base " + u.base().to_string() + " differs from top " + u.top().to_string());
  for (int x : u.base().k())
    if (x != 0 && x != u.N()) throw std::invalid_argument("ev_closed: source " + u.base().to_string() + " is not one-dimensional");
  return ladder_matrix(u).entry(0, 0);
}

namespace {

void check_form_boundary(const Ladder& u, const Ladder& v) {
  if (!(u.base() == v.base())) throw WeightMismatch("web_form: different bases");
  if (!webs::is_highest_pattern(u.base()))
    throw std::invalid_argument("web_form: base " + u.base().to_string() + " is not a highest weight");
  if (!(u.top() == v.top())) throw WeightMismatch("web_form: different tops");
}

}  // namespace

LaurentPoly web_form(const Ladder& u, const Ladder& v) {
  check_form_boundary(u, v);
  return ev_closed(compose(webs::reflect(u), v)).shifted(webs::d_norm(u.top()));
}

std::vector<std::vector<LaurentPoly>> gram_matrix(const std::vector<Ladder>& ladders) {
  if (ladders.empty()) return {};
  for (const auto& u : ladders) check_form_boundary(ladders[0], u);
  const int d = webs::d_norm(ladders[0].top());
  std::vector<QMatrix> down, up;
  for (const auto& u : ladders) {
    down.push_back(ladder_matrix(webs::reflect(u)));
    up.push_back(ladder_matrix(u));
  }
  const size_t n = ladders.size();
  std::vector<std::vector<LaurentPoly>> g(n, std::vector<LaurentPoly>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      LaurentPoly s;
      for (const auto& [row, c] : up[b].column(0))
        for (const auto& [r0, x] : down[a].column(row))
          if (r0 == 0) s += x * c;
      g[a][b] = s.shifted(d);
    }
  return g;
}

}  // namespace webcalc::repfun
