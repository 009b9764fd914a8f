#include "webcalc/mfcore/factorizations.hpp"

#include <atomic>
#include <stdexcept>

#include "webcalc/qpoly/symmetric.hpp"

namespace webcalc::mf {

namespace {

struct Side {
  std::vector<std::pair<std::string, int>> alphabets;
};

RingPtr ring_for(const std::vector<std::pair<std::string, int>>& alphabets) {
  std::vector<Variable> vars;
  for (const auto& [name, size] : alphabets)
    for (auto& v : alphabet_variables(name, size)) vars.push_back(std::move(v));
  return qpoly::make_ring(std::move(vars));
}

// X-series generators of the product of several positive alphabets.
std::vector<MultiPoly> combined_generators(const RingPtr& ring, const Side& side) {
  int k = 0;
  std::vector<std::pair<int, std::vector<MultiPoly>>> alphabets;
  for (const auto& [name, size] : side.alphabets) {
    k += size;
    alphabets.emplace_back(1, alphabet_generators(ring, name, size));
  }
  if (side.alphabets.size() == 1) return alphabets[0].second;
  std::vector<MultiPoly> out;
  for (int a = 1; a <= k; ++a) out.push_back(qpoly::x_series_from(alphabets, a, ring));
  return out;
}

// Rows (p_a ; X_a - Y_a) telescoping P(X) - P(Y).
KoszulMF difference_quotients(const Side& top, const Side& bottom, int N) {
  std::vector<std::pair<std::string, int>> all;
  for (const auto& x : top.alphabets)
    if (x.second > 0) all.push_back(x);
  for (const auto& x : bottom.alphabets)
    if (x.second > 0) all.push_back(x);
  RingPtr ring = ring_for(all);
  auto X = combined_generators(ring, top);
  auto Y = combined_generators(ring, bottom);
  if (X.size() != Y.size()) throw std::invalid_argument("difference_quotients: thickness mismatch");
  const int k = static_cast<int>(X.size());
  KoszulMF m(ring);
  m.potential_degree = 2 * (N + 1);
  for (int a = 0; a < k; ++a) {
    std::vector<MultiPoly> A, B;
    for (int j = 0; j < k; ++j) {
      A.push_back(j < a ? Y[static_cast<size_t>(j)] : X[static_cast<size_t>(j)]);
      B.push_back(j <= a ? Y[static_cast<size_t>(j)] : X[static_cast<size_t>(j)]);
    }
    MultiPoly num = qpoly::power_sum_from(N + 1, A, ring) - qpoly::power_sum_from(N + 1, B, ring);
    MultiPoly den = X[static_cast<size_t>(a)] - Y[static_cast<size_t>(a)];
    m.rows.push_back({qpoly::exact_divide(num, den), den, 2 * (N + 1) - 2 * (a + 1), 2 * (a + 1)});
  }
  for (const auto& [name, size] : top.alphabets)
    if (size > 0) m.boundary.push_back({name, size, Role::Top});
  for (const auto& [name, size] : bottom.alphabets)
    if (size > 0) m.boundary.push_back({name, size, Role::Bottom});
  return m;
}

std::atomic<long> fresh_counter{0};

}  // namespace

KoszulMF mf_edge(int k, int N, const std::string& top, const std::string& bottom) {
  if (k < 0) throw std::invalid_argument("mf_edge: negative thickness");
  return difference_quotients({{{top, k}}}, {{{bottom, k}}}, N);
}

KoszulMF mf_merge(int k1, int k2, int N, const std::string& top, const std::string& in1, const std::string& in2) {
  if (k1 < 0 || k2 < 0) throw std::invalid_argument("mf_merge: negative thickness");
  KoszulMF m = difference_quotients({{{top, k1 + k2}}}, {{{in1, k1}, {in2, k2}}}, N);
  m.qshift = -k1 * k2;
  return m;
}

KoszulMF mf_split(int k1, int k2, int N, const std::string& out1, const std::string& out2, const std::string& bottom) {
  if (k1 < 0 || k2 < 0) throw std::invalid_argument("mf_split: negative thickness");
  return difference_quotients({{{out1, k1}, {out2, k2}}}, {{{bottom, k1 + k2}}}, N);
}

KoszulMF compile_web(const webs::Ladder& u, const std::string& bottom, const std::string& top) {
  const int N = u.N(), m = u.m();
  const long id = ++fresh_counter;
  auto name = [](const std::string& prefix, int i) { return prefix + "." + std::to_string(i); };
  std::vector<std::string> cur;
  for (int i = 1; i <= m; ++i) cur.push_back(name(bottom, i));
  // Start from the empty factorization over the bottom alphabets.
  std::vector<std::pair<std::string, int>> bottom_alphabets;
  for (int i = 1; i <= m; ++i) bottom_alphabets.emplace_back(name(bottom, i), u.base()[i - 1]);
  std::vector<KoszulMF> parts;
  if (u.rungs().empty()) {
    for (int i = 1; i <= m; ++i) parts.push_back(mf_edge(u.base()[i - 1], N, name(top, i), cur[static_cast<size_t>(i - 1)]));
  }
  for (size_t level = 0; level < u.rungs().size(); ++level) {
    const auto& r = u.rungs()[level];
    const auto& k = u.levels()[level];
    const bool last = level + 1 == u.rungs().size();
    std::vector<std::string> next;
    for (int i = 1; i <= m; ++i)
      next.push_back(last ? name(top, i) : "w" + std::to_string(id) + ".L" + std::to_string(level + 1) + "." + std::to_string(i));
    const std::string J = "w" + std::to_string(id) + ".J" + std::to_string(level + 1);
    const int i = r.pos - 1;  // 0-based left upright
    const int a = r.thickness;
    for (int j = 0; j < m; ++j)
      if (j != i && j != i + 1) parts.push_back(mf_edge(k[j], N, next[static_cast<size_t>(j)], cur[static_cast<size_t>(j)]));
    const auto& cl = cur[static_cast<size_t>(i)];
    const auto& cr = cur[static_cast<size_t>(i + 1)];
    const auto& nl = next[static_cast<size_t>(i)];
    const auto& nr = next[static_cast<size_t>(i + 1)];
    if (r.sign == webs::Sign::Plus) {
      parts.push_back(mf_split(k[i + 1] - a, a, N, nr, J, cr));
      parts.push_back(mf_merge(a, k[i], N, nl, J, cl));
    } else {
      parts.push_back(mf_split(a, k[i] - a, N, J, nl, cl));
      parts.push_back(mf_merge(k[i + 1], a, N, nr, cr, J));
    }
    cur = std::move(next);
  }
  KoszulMF out(qpoly::make_ring({}));
  out.potential_degree = 2 * (N + 1);
  for (const auto& p : parts) out = tensor(out, p);
  // Boundary alphabets of thickness 0 carry no variables; list them for bookkeeping anyway.
  for (int i = 1; i <= m; ++i) {
    if (u.base()[i - 1] == 0) out.boundary.push_back({name(bottom, i), 0, Role::Bottom});
    if (u.top()[i - 1] == 0) out.boundary.push_back({name(top, i), 0, Role::Top});
  }
  return out;
}

KoszulMF rename_alphabet(const KoszulMF& m, const std::string& from, const std::string& to) {
  std::vector<Variable> vars = m.ring->vars();
  for (auto& v : vars)
    if (v.alphabet == from) {
      v.alphabet = to;
      v.name = "e" + std::to_string(v.index) + "(" + to + ")";
    }
  RingPtr ring = qpoly::make_ring(std::move(vars));
  auto move = [&](const MultiPoly& p) {
    MultiPoly out(ring);
    for (const auto& [e, c] : p.terms()) out.add_term(e, c);
    return out;
  };
  KoszulMF out = m;
  out.ring = ring;
  for (auto& r : out.rows) {
    r.p = move(r.p);
    r.q = move(r.q);
  }
  for (auto& b : out.boundary)
    if (b.name == from) b.name = to;
  return out;
}

}  // namespace webcalc::mf
