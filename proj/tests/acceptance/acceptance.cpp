// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "webcalc/errors.hpp"
#include "webcalc/linalg.hpp"
#include "webcalc/mfcore/ext.hpp"
#include "webcalc/mfcore/factorizations.hpp"
#include "webcalc/mfcore/reduce.hpp"
#include "webcalc/qpoly/symmetric.hpp"
#include "webcalc/relations/relations.hpp"
#include "webcalc/repfun/functor.hpp"

using namespace webcalc;
using qpoly::LaurentPoly;
using qpoly::MultiPoly;
using repfun::QMatrix;
using webs::GlWeight;
using webs::Ladder;
using webs::Rung;
using webs::Sign;

namespace {

// Time limits in seconds, one per criterion.
constexpr double kLimit1 = 1;
constexpr double kLimit2 = 30;
constexpr double kLimit3 = 300;
constexpr double kLimit4 = 300;
constexpr double kLimit5 = 300;
constexpr double kLimit6 = 600;
constexpr double kLimit7 = 600;
constexpr double kLimit8 = 600;
constexpr double kLimit9 = 60;
constexpr double kLimit10 = 300;
constexpr double kLimit11 = 600;
constexpr double kLimit12 = 60;
// Generic specialization of q for ranks.
const mpq_class kGenericQ = 2;
constexpr int kSequenceLength = 8;
constexpr int kAdjunctionPairs = 200;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

LaurentPoly from_oracle(const oracle::Poly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p) out = out + LaurentPoly::monomial(e, c);
  return out;
}

std::vector<Rung> rung_alphabet(int N, int m, int max_thick) {
  std::vector<Rung> out;
  for (int pos = 1; pos < m; ++pos)
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (int a = 1; a <= std::min(N, max_thick); ++a) out.push_back({pos, s, a});
  return out;
}

std::vector<Ladder> ladders_from(const GlWeight& base, int max_rungs, int max_thick) {
  auto alphabet = rung_alphabet(base.N(), base.m(), max_thick);
  std::vector<Ladder> out{Ladder(base)};
  for (size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].rungs().size()) >= max_rungs) continue;
    for (const auto& r : alphabet) {
      auto rs = out[i].rungs();
      rs.push_back(r);
      if (auto l = Ladder::make(base, rs)) out.push_back(*l);
    }
  }
  return out;
}

std::vector<GlWeight> all_weights(int N, int m) {
  std::vector<GlWeight> out;
  std::vector<int> k(static_cast<size_t>(m), 0);
  while (true) {
    out.emplace_back(N, k);
    size_t i = 0;
    while (i < k.size() && k[i] == N) k[i++] = 0;
    if (i == k.size()) break;
    ++k[i];
  }
  return out;
}

// Rung matrix on weight k, or nullopt when the rung leaves the N-bounded weights.
std::optional<QMatrix> rung(const Rung& r, const GlWeight& k) {
  if (!webs::apply_rung(k, r)) return std::nullopt;
  return repfun::rung_matrix(r, k);
}

// Product of rungs applied right to left (last entry acts first) on weight k; nullopt for zero.
std::optional<QMatrix> word(const std::vector<Rung>& rs, const GlWeight& k) {
  GlWeight cur = k;
  std::optional<QMatrix> acc;
  for (auto it = rs.rbegin(); it != rs.rend(); ++it) {
    auto m = rung(*it, cur);
    if (!m) return std::nullopt;
    acc = acc ? *m * *acc : *m;
    cur = *webs::apply_rung(cur, *it);
  }
  return acc;
}

// Weight reached by a word computed entrywise; nullopt when it leaves the N-bounded range.
std::optional<GlWeight> formal_target(const GlWeight& k, const std::vector<Rung>& rs) {
  std::vector<int> v = k.k();
  for (const auto& r : rs) {
    const int sg = r.sign == Sign::Plus ? r.thickness : -r.thickness;
    v[static_cast<size_t>(r.pos - 1)] += sg;
    v[static_cast<size_t>(r.pos)] -= sg;
  }
  for (int x : v)
    if (x < 0 || x > k.N()) return std::nullopt;
  return GlWeight(k.N(), v);
}

// True when the combination vanishes on weight k.
bool vanishes(const std::vector<std::pair<LaurentPoly, std::vector<Rung>>>& terms, const GlWeight& k);

// Sum of signed words; all words start and end at k (or vanish).
QMatrix combine(const std::vector<std::pair<LaurentPoly, std::vector<Rung>>>& terms, const GlWeight& k, const GlWeight& target) {
  auto b = repfun::fock_basis(k.N(), k.k());
  auto t = repfun::fock_basis(target.N(), target.k());
  QMatrix acc(t, b);
  for (const auto& [c, w] : terms)
    if (auto m = word(w, k)) acc += m->scaled(c);
  return acc;
}

bool vanishes(const std::vector<std::pair<LaurentPoly, std::vector<Rung>>>& terms, const GlWeight& k) {
  auto target = formal_target(k, terms.front().second);
  if (!target) {
    for (const auto& [c, w] : terms)
      if (auto m = word(w, k); m && !m->is_zero()) return false;
    return true;
  }
  return combine(terms, k, *target).is_zero();
}

Outcome criterion1() {
  Outcome o;
  MultiPoly p = qpoly::power_sum_in_e(3, 2);
  auto e1 = MultiPoly::variable(p.ring(), "e1"), e2 = MultiPoly::variable(p.ring(), "e2");
  MultiPoly expected = e1 * e1 * e1 - (e1 * e2).scaled(3);
  if (!(p == expected)) o.fail("got " + p.to_string());
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int N = 2; N <= 4; ++N) {
    for (int a = 0; a <= N; ++a)
      for (int b = 0; a + b <= N; ++b) {
        QMatrix ms = repfun::merge_matrix(a, b, N) * repfun::split_matrix(a, b, N);
        auto c = ms.scalar_multiple_of_identity();
        if (!c || *c != qpoly::qbinom(a + b, a)) o.fail("merge*split " + std::to_string(a) + "," + std::to_string(b) + " N=" + std::to_string(N));
      }
    for (const auto& r : relations::sweep(N, {relations::Rule::Digon, relations::Rule::OppositeDigon}))
      if (!r.pass) o.fail(r.line());
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  size_t n = 0;
  for (int N = 2; N <= 3; ++N)
    for (const auto& r : relations::sweep(N, {relations::Rule::ParallelSquare, relations::Rule::OppositeSquare})) {
      ++n;
      if (!r.pass) o.fail(r.line());
    }
  o.detail = o.pass ? std::to_string(n) + " instances" : o.detail;
  return o;
}

Outcome criterion4() {
  Outcome o;
  size_t checks = 0;
  for (int N = 2; N <= 3; ++N)
    for (int m = 2; m <= 3; ++m)
      for (int d = 0; d <= 6; ++d)
        for (const auto& k : webs::enumerate_weights(m, d, N)) {
          const QMatrix id = QMatrix::identity(repfun::fock_basis(N, k.k()));
          for (int i = 1; i < m; ++i)
            for (int j = 1; j < m; ++j) {
              Rung E{i, Sign::Plus, 1}, F{j, Sign::Minus, 1};
              const int lam = k[i - 1] - k[i];
              std::vector<std::pair<LaurentPoly, std::vector<Rung>>> terms{{1, {E, F}}, {-1, {F, E}}};
              if (i == j) {
                if (!(combine(terms, k, k) == id.scaled(qpoly::qint_signed(lam)))) o.fail("[E" + std::to_string(i) + ",F" + std::to_string(i) + "] on " + k.to_string());
              } else if (!vanishes(terms, k)) {
                o.fail("[E" + std::to_string(i) + ",F" + std::to_string(j) + "] on " + k.to_string());
              }
              ++checks;
            }
          for (int i = 1; i < m; ++i)
            for (int j = 1; j < m; ++j) {
              if (std::abs(i - j) != 1) continue;
              for (Sign s : {Sign::Plus, Sign::Minus}) {
                Rung X{i, s, 1}, Y{j, s, 1};
                if (!vanishes({{1, {X, X, Y}}, {-qpoly::qint(2), {X, Y, X}}, {1, {Y, X, X}}}, k))
                  o.fail("Serre " + X.to_string() + "," + Y.to_string() + " on " + k.to_string());
                // Divided powers: X X = [2] X^(2).
                Rung X2{i, s, 2};
                if (!vanishes({{1, {X, X}}, {-qpoly::qint(2), {X2}}}, k)) o.fail("divided power " + X2.to_string() + " on " + k.to_string());
                checks += 2;
              }
            }
        }
  if (o.pass) o.detail = std::to_string(checks) + " identities";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int N = 2; N <= 3; ++N)
    for (int m = 2; m <= 3; ++m)
      for (int l = 1; l <= m; ++l) {
        if (l * N > 6) continue;
        GlWeight hw = webs::highest_weight(N, m, l);
        if (repfun::web_form(Ladder(hw), Ladder(hw)) != LaurentPoly(1)) o.fail("<w,w> at " + hw.to_string());
      }
  std::mt19937 rng(20261016);
  int pairs = 0, attempts = 0;
  while (pairs < kAdjunctionPairs && attempts < 200000) {
    ++attempts;
    const int N = 2 + static_cast<int>(rng() % 2);
    const int m = 2 + static_cast<int>(rng() % 2);
    const int l = 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1));
    if (l * N > 6) continue;
    GlWeight base = webs::highest_weight(N, m, l);
    auto alphabet = rung_alphabet(N, m, N);
    auto random_ladder = [&](int len) {
      std::vector<Rung> rs;
      for (int t = 0; t < len; ++t) {
        auto cand = rs;
        cand.push_back(alphabet[rng() % alphabet.size()]);
        if (Ladder::make(base, cand)) rs = cand;
      }
      return Ladder(base, rs);
    };
    Ladder u = random_ladder(static_cast<int>(rng() % 5));
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1));
    auto rs = u.rungs();
    rs.push_back({i, Sign::Plus, 1});
    auto eu = Ladder::make(base, rs);
    if (!eu) continue;
    // v: a random ladder ending where E u ends.
    std::optional<Ladder> v;
    for (int t = 0; t < 200 && !v; ++t) {
      Ladder c = random_ladder(static_cast<int>(rng() % 6));
      if (c.top() == eu->top()) v = c;
    }
    if (!v) continue;
    auto vr = v->rungs();
    vr.push_back({i, Sign::Minus, 1});
    auto fv = Ladder::make(base, vr);
    const int lam = u.top()[i - 1] - u.top()[i];
    LaurentPoly lhs = repfun::web_form(*eu, *v);
    LaurentPoly rhs = fv ? repfun::web_form(u, *fv).shifted(-1 - lam) : LaurentPoly();
    if (lhs != rhs) o.fail(eu->to_string() + " vs " + v->to_string());
    ++pairs;
  }
  if (pairs < kAdjunctionPairs) o.fail("only " + std::to_string(pairs) + " pairs sampled");
  if (o.pass) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome criterion6() {
  Outcome o;
  size_t n = 0;
  for (int N = 2; N <= 3; ++N)
    for (int m = 2; m <= 4; ++m)
      for (int l = 1; l <= 2 && l <= m; ++l) {
        GlWeight hw = webs::highest_weight(N, m, l);
        for (const auto& u : ladders_from(hw, 4, N)) {
          if (u.top() != hw) continue;
          ++n;
          try {
            LaurentPoly a = relations::reduce_to_highest(u);
            for (const auto& [e, c] : a.terms())
              if (c < 0) o.fail(u.to_string());
          } catch (const NegativeCoefficient&) {
            o.fail(u.to_string());
          }
        }
      }
  if (o.pass) o.detail = std::to_string(n) + " closed ladders";
  return o;
}

// Rank of the Gram matrix on W(k,N) summed over the weights of Lambda(m, lN)_N.
Outcome criterion7() {
  Outcome o;
  struct Case {
    int N, l, m;
  };
  std::string detail;
  for (const Case c : {Case{2, 1, 2}, Case{2, 1, 3}, Case{2, 2, 4}}) {
    GlWeight hw = webs::highest_weight(c.N, c.m, c.l);
    auto alphabet = rung_alphabet(c.N, c.m, c.N);
    // Breadth-first over divided-power words; keep a word when its image raises the span at q = 2.
    std::map<GlWeight, std::vector<Ladder>> kept;
    std::map<GlWeight, linalg::Matrix> span;
    auto image = [&](const Ladder& u) {
      QMatrix m = repfun::ladder_matrix(u);
      std::vector<mpq_class> v(m.rows()->size());
      for (const auto& [i, p] : m.column(0)) v[i] = linalg::evaluate(p, kGenericQ);
      return v;
    };
    auto consider = [&](const Ladder& u) {
      auto& rows = span[u.top()];
      auto v = image(u);
      auto with = rows;
      with.push_back(v);
      if (linalg::rank(with) > rows.size()) {
        rows.push_back(v);
        kept[u.top()].push_back(u);
        return true;
      }
      return false;
    };
    std::vector<Ladder> frontier{Ladder(hw)};
    consider(frontier[0]);
    for (int len = 1; len <= kSequenceLength && !frontier.empty(); ++len) {
      std::vector<Ladder> next;
      for (const auto& u : frontier)
        for (const auto& r : alphabet) {
          auto rs = u.rungs();
          rs.push_back(r);
          auto l = Ladder::make(hw, rs);
          if (l && consider(*l)) next.push_back(*l);
        }
      frontier = std::move(next);
    }
    long long total = 0;
    for (const auto& k : webs::enumerate_weights(c.m, c.l * c.N, c.N)) {
      auto it = kept.find(k);
      if (it == kept.end()) continue;
      auto g = repfun::gram_matrix(it->second);
      linalg::Matrix gm;
      for (const auto& row : g) {
        std::vector<mpq_class> r;
        for (const auto& x : row) r.push_back(linalg::evaluate(x, kGenericQ));
        gm.push_back(r);
      }
      total += static_cast<long long>(linalg::rank(gm));
    }
    std::vector<int> lambda(static_cast<size_t>(c.m), 0);
    for (int i = 0; i < c.l; ++i) lambda[static_cast<size_t>(i)] = c.N;
    const long long expected = oracle::weyl_dimension(lambda);
    detail += (detail.empty() ? "" : ", ") + std::to_string(total) + "/" + std::to_string(expected);
    if (total != expected)
      o.fail("N=" + std::to_string(c.N) + " l=" + std::to_string(c.l) + " m=" + std::to_string(c.m) + ": " + std::to_string(total) + " vs " + std::to_string(expected));
  }
  if (o.pass) o.detail = detail;
  return o;
}

Outcome criterion8() {
  Outcome o;
  size_t n = 0;
  for (int N = 2; N <= 3; ++N) {
    for (int k = 1; k <= 3; ++k) {
      ++n;
      if (!mf::check_potential(mf::mf_edge(k, N, "a", "b"))) o.fail("edge " + std::to_string(k));
    }
    for (int k1 = 0; k1 <= 3; ++k1)
      for (int k2 = 0; k1 + k2 <= 3; ++k2) {
        n += 2;
        if (!mf::check_potential(mf::mf_merge(k1, k2, N, "c", "a", "b"))) o.fail("merge");
        if (!mf::check_potential(mf::mf_split(k1, k2, N, "a", "b", "c"))) o.fail("split");
      }
    for (int m = 1; m <= 3; ++m)
      for (const auto& base : all_weights(N, m))
        for (const auto& u : ladders_from(base, 3, N)) {
          ++n;
          if (!mf::check_potential(mf::compile_web(u))) o.fail(u.to_string());
        }
  }
  if (o.pass) o.detail = std::to_string(n) + " factorizations";
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (int N = 2; N <= 3; ++N)
    if (!mf::exclude_variables(mf::mf_edge(N + 1, N, "top", "bot")).zero) o.fail("N=" + std::to_string(N));
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (auto [N, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    auto e = mf::mf_edge(k, N, "top", "bot");
    auto [h0, h1] = mf::ext_qdim(e, e);
    LaurentPoly expected = from_oracle(oracle::grassmannian_poincare(N, k));
    const bool one_summand = (h0 == expected && h1.is_zero()) || (h1 == expected && h0.is_zero());
    if (!one_summand) o.fail("N=" + std::to_string(N) + " k=" + std::to_string(k) + ": " + h0.to_string() + " / " + h1.to_string());
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  GlWeight base(2, {2, 0});
  auto ls = ladders_from(base, 2, 1);
  size_t n = 0;
  for (const auto& u : ls)
    for (const auto& v : ls) {
      if (u.top() != v.top()) continue;
      ++n;
      try {
        auto [h0, h1] = mf::ext_qdim(mf::compile_web(u), mf::compile_web(v));
        LaurentPoly form = repfun::web_form(u, v);
        if (h0 + h1 != form) o.fail(u.to_string() + " | " + v.to_string() + ": " + (h0 + h1).to_string() + " vs " + form.to_string());
      } catch (const IrreducibleToFinite& e) {
        o.fail(std::string("irreducible: ") + e.what());
      }
    }
  if (o.pass) o.detail = std::to_string(n) + " pairs";
  return o;
}

std::string rows_text(const mf::KoszulMF& m) {
  std::string s;
  for (const auto& v : m.ring->vars()) s += v.name + " ";
  s += "|";
  for (const auto& r : m.rows) s += r.p.to_string() + ";" + r.q.to_string() + "|";
  return s + std::to_string(m.qshift) + "," + std::to_string(m.hshift);
}

Outcome criterion12() {
  Outcome o;
  for (int N = 2; N <= 4; ++N)
    for (int k = 1; k <= N; ++k) {
      auto edge = rows_text(mf::mf_edge(k, N, "c", "b"));
      if (rows_text(mf::mf_merge(0, k, N, "c", "a", "b")) != edge) o.fail("merge k=" + std::to_string(k));
      if (rows_text(mf::mf_split(k, 0, N, "c", "a", "b")) != edge) o.fail("split k=" + std::to_string(k));
    }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Newton identity p3 = e1^3 - 3 e1 e2", kLimit1, criterion1},
      {2, "digon and opposite digon, N = 2..4", kLimit2, criterion2},
      {3, "parallel and opposite squares, N = 2, 3", kLimit3, criterion3},
      {4, "commutator and Serre relations on rung matrices", kLimit4, criterion4},
      {5, "highest weight norm and adjunction", kLimit5, criterion5},
      {6, "positivity of closed ladders", kLimit6, criterion6},
      {7, "web space dimensions against the Weyl formula", kLimit7, criterion7},
      {8, "matrix factorization potentials", kLimit8, criterion8},
      {9, "contractibility of the (N+1)-edge", kLimit9, criterion9},
      {10, "Grassmannian EXT", kLimit10, criterion10},
      {11, "EXT dimension equals the web form", kLimit11, criterion11},
      {12, "degenerate merge and split", kLimit12, criterion12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.limit) o.fail("took " + std::to_string(dt) + " s, limit " + std::to_string(c.limit) + " s");
    if (!o.pass) ++failed;
    std::printf("%s %2d %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, dt, o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
