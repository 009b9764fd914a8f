#include <gtest/gtest.h>

#include "oracles.hpp"
#include "webcalc/errors.hpp"
#include "webcalc/mfcore/ext.hpp"
#include "webcalc/mfcore/factorizations.hpp"
#include "webcalc/mfcore/reduce.hpp"
#include "webcalc/repfun/functor.hpp"

using namespace webcalc;
using namespace webcalc::mf;
using qpoly::LaurentPoly;
using webs::GlWeight;
using webs::Ladder;

namespace {

RingPtr xy_ring() { return qpoly::make_ring({{"x", 2, "", 0}, {"y", 2, "", 0}}); }

LaurentPoly from_oracle(const oracle::Poly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p) out = out + LaurentPoly::monomial(e, c);
  return out;
}

std::string rows_text(const KoszulMF& m) {
  std::string s;
  for (const auto& r : m.rows) s += r.p.to_string() + " ; " + r.q.to_string() + " [" + std::to_string(r.dp) + "," + std::to_string(r.dq) + "]\n";
  return s;
}

std::vector<std::string> var_names(const KoszulMF& m) {
  std::vector<std::string> out;
  for (const auto& v : m.ring->vars()) out.push_back(v.name);
  return out;
}

}  // namespace

TEST(Koszul, Basics) {
  auto R = xy_ring();
  auto x = MultiPoly::variable(R, "x"), y = MultiPoly::variable(R, "y");
  KoszulMF k = koszul(x, y);
  EXPECT_EQ(k.potential_degree, 4);
  EXPECT_EQ(total_potential(k), x * y);
  EXPECT_THROW(koszul(x + x * y, y), std::invalid_argument);
  EXPECT_TRUE(total_potential(koszul(x, MultiPoly(R), 2, 2)).is_zero());

  KoszulMF unit = koszul(MultiPoly(R, 1), x * x, 0, 4);
  EXPECT_TRUE(exclude_variables(unit).zero);

  KoszulMF empty(R);
  KoszulMF t = tensor(k, empty);
  EXPECT_EQ(rows_text(t), rows_text(k));
  EXPECT_EQ(total_potential(tensor(k, koszul(y, y))), x * y + y * y);

  EXPECT_EQ(shift_h(shift_h(k)).hshift, k.hshift);
  EXPECT_EQ(shift_q(k, 3).qshift, 3);
}

TEST(Koszul, DualInvolution) {
  KoszulMF m = shift_q(shift_h(compile_web(Ladder::parse("N=2 m=2 base=[1,1] rungs=[E1^1]"))), 5);
  KoszulMF dd = dual(dual(m));
  EXPECT_EQ(dd.qshift, m.qshift);
  EXPECT_EQ(dd.hshift, m.hshift);
  EXPECT_EQ(dd.boundary, m.boundary);
  ASSERT_EQ(dd.rows.size(), m.rows.size());
  for (size_t i = 0; i < m.rows.size(); ++i) {
    EXPECT_EQ(dd.rows[i].p, -m.rows[i].p);
    EXPECT_EQ(dd.rows[i].q, -m.rows[i].q);
  }
}

TEST(Koszul, EdgeRowsAgainstValues) {
  // p * (x - y) = x^3 - y^3 for the thin edge at N = 2.
  KoszulMF e = mf_edge(1, 2, "top", "bot");
  ASSERT_EQ(e.rows.size(), 1u);
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b) {
      std::vector<std::int64_t> vals(e.ring->size());
      vals[e.ring->index_of("e1(top)")] = a;
      vals[e.ring->index_of("e1(bot)")] = b;
      EXPECT_EQ(e.rows[0].p.evaluate(vals), a * a + a * b + b * b);
    }
  // Thickness 2: the potential is p_{N+1} of the roots.
  KoszulMF e2 = mf_edge(2, 3, "top", "bot");
  for (std::int64_t a : {-2, 1, 3})
    for (std::int64_t b : {0, 2}) {
      auto et = oracle::elementary_values({a, b});
      auto eb = oracle::elementary_values({b - 1, a + 2});
      std::vector<std::int64_t> vals(e2.ring->size());
      for (int j = 1; j <= 2; ++j) {
        vals[e2.ring->index_of("e" + std::to_string(j) + "(top)")] = et[static_cast<size_t>(j)];
        vals[e2.ring->index_of("e" + std::to_string(j) + "(bot)")] = eb[static_cast<size_t>(j)];
      }
      EXPECT_EQ(total_potential(e2).evaluate(vals), oracle::power_sum_values({a, b}, 4) - oracle::power_sum_values({b - 1, a + 2}, 4));
    }
}

TEST(Koszul, EdgeAsTensorOfRows) {
  KoszulMF e = mf_edge(3, 3, "top", "bot");
  KoszulMF built(e.ring);
  for (const auto& r : e.rows) built = tensor(built, koszul(r.p, r.q, r.dp, r.dq));
  EXPECT_EQ(rows_text(built), rows_text(e));
  EXPECT_EQ(built.qshift, 0);
}

TEST(Potentials, EdgesMergesSplits) {
  for (int N = 2; N <= 3; ++N) {
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(check_potential(mf_edge(k, N, "a", "b"))) << N << " " << k;
    for (int k1 = 0; k1 <= 3; ++k1)
      for (int k2 = 0; k1 + k2 <= 3; ++k2) {
        EXPECT_TRUE(check_potential(mf_merge(k1, k2, N, "c", "a", "b"))) << N << " " << k1 << " " << k2;
        EXPECT_TRUE(check_potential(mf_split(k1, k2, N, "a", "b", "c"))) << N << " " << k1 << " " << k2;
      }
  }
  EXPECT_EQ(mf_merge(2, 1, 3, "c", "a", "b").qshift, -2);
}

TEST(Potentials, CompiledLadders) {
  const char* texts[] = {"N=2 m=2 base=[2,0] rungs=[F1^1, E1^1]", "N=3 m=3 base=[1,2,0] rungs=[E1^1, F2^1, E2^1]",
                         "N=3 m=2 base=[3,0] rungs=[F1^2, E1^1]", "N=3 m=3 base=[1,1,1] rungs=[E2^1, E1^2]"};
  for (const char* t : texts) {
    KoszulMF m = compile_web(Ladder::parse(t));
    EXPECT_TRUE(check_potential(m)) << t;
  }
}

TEST(Potentials, CorruptedRowFails) {
  KoszulMF m = compile_web(Ladder::parse("N=2 m=2 base=[1,1] rungs=[E1^1]"));
  ASSERT_TRUE(check_potential(m));
  m.rows[0].p = m.rows[0].p + MultiPoly::variable(m.ring, 0) * MultiPoly::variable(m.ring, 0);
  EXPECT_FALSE(check_potential(m));
}

TEST(Compile, Shapes) {
  KoszulMF id = compile_web(Ladder(GlWeight(3, {1, 2, 0})));
  KoszulMF edges = tensor(mf_edge(1, 3, "top.1", "bot.1"), mf_edge(2, 3, "top.2", "bot.2"));
  EXPECT_EQ(rows_text(id), rows_text(edges));

  KoszulMF e = compile_web(Ladder::parse("N=2 m=2 base=[1,1] rungs=[E1^1]"));
  // one row for the merge, one for the split, one internal alphabet of size 1
  EXPECT_EQ(e.rows.size(), 3u);
  EXPECT_EQ(internal_variables(e).size(), 1u);

  Ladder lower = Ladder::parse("N=2 m=2 base=[2,0] rungs=[F1^1]");
  Ladder upper = Ladder::parse("N=2 m=2 base=[1,1] rungs=[E1^1]");
  KoszulMF whole = compile_web(webs::compose(upper, lower));
  KoszulMF glued = tensor(compile_web(lower, "bot", "mid"), compile_web(upper, "mid", "top"));
  EXPECT_EQ(whole.rows.size(), glued.rows.size());
  EXPECT_TRUE(check_potential(glued));
  EXPECT_EQ(ext_qdim(whole, whole), ext_qdim(glued, glued));
}

TEST(Compile, AlphabetCollision) {
  KoszulMF a = mf_edge(1, 2, "x", "y");
  EXPECT_THROW(tensor(a, mf_edge(1, 2, "x", "z")), AlphabetCollision);
  EXPECT_THROW(tensor(a, mf_edge(2, 2, "z", "x")), AlphabetCollision);
}

TEST(Degenerate, MergeAndSplitWithEmptyAlphabet) {
  for (int N = 2; N <= 3; ++N)
    for (int k = 1; k <= 3; ++k) {
      KoszulMF edge = mf_edge(k, N, "c", "b");
      KoszulMF merge = mf_merge(0, k, N, "c", "a", "b");
      EXPECT_EQ(var_names(merge), var_names(edge));
      EXPECT_EQ(rows_text(merge), rows_text(edge));
      EXPECT_EQ(merge.qshift, 0);
      KoszulMF split = mf_split(k, 0, N, "c", "a", "b");
      KoszulMF edge2 = mf_edge(k, N, "c", "b");
      EXPECT_EQ(rows_text(split), rows_text(edge2));
    }
}

TEST(Exclusion, SubstitutesIsolatedVariable) {
  auto R = xy_ring();
  auto x = MultiPoly::variable(R, "x"), y = MultiPoly::variable(R, "y");
  KoszulMF m = tensor(koszul(x * x * y, y - x), koszul(x * y, x * y));
  KoszulMF r = exclude_variables(m);
  EXPECT_FALSE(r.zero);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.ring->size(), 1u);
  EXPECT_EQ(exclude_variables(r).rows.size(), 1u);
}

TEST(Exclusion, ContractibleEdge) {
  for (int N = 2; N <= 3; ++N) EXPECT_TRUE(exclude_variables(mf_edge(N + 1, N, "top", "bot")).zero) << N;
  EXPECT_FALSE(exclude_variables(mf_edge(2, 2, "top", "bot")).zero);
}

TEST(Ext, Grassmannians) {
  for (auto [N, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
    KoszulMF e = mf_edge(k, N, "top", "bot");
    auto [h0, h1] = ext_qdim(e, e);
    EXPECT_EQ(h0, from_oracle(oracle::grassmannian_poincare(N, k))) << N << " " << k;
    EXPECT_TRUE(h1.is_zero());
  }
  auto data = ext_data(mf_edge(1, 2, "top", "bot"), mf_edge(1, 2, "top", "bot"));
  EXPECT_TRUE(data.complex.is_complex());
}

TEST(Ext, ContractibleGivesZero) {
  KoszulMF e = mf_edge(3, 2, "top", "bot");
  auto [h0, h1] = ext_qdim(e, e);
  EXPECT_TRUE(h0.is_zero());
  EXPECT_TRUE(h1.is_zero());
}

TEST(Ext, MatchesWebFormN2) {
  const char* texts[] = {"N=2 m=2 base=[2,0] rungs=[]", "N=2 m=2 base=[2,0] rungs=[F1^1, E1^1]", "N=2 m=2 base=[2,0] rungs=[F1^1]",
                         "N=2 m=2 base=[2,0] rungs=[F1^1, F1^1]"};
  std::vector<Ladder> ls;
  for (const char* t : texts) ls.push_back(Ladder::parse(t));
  for (const auto& u : ls)
    for (const auto& v : ls) {
      if (u.top() != v.top()) continue;
      auto [h0, h1] = ext_qdim(compile_web(u), compile_web(v));
      EXPECT_EQ(h0 + h1, repfun::web_form(u, v)) << u.to_string() << " | " << v.to_string();
    }
}

TEST(Ext, DualAgainstReflection) {
  const char* texts[] = {"N=2 m=2 base=[2,0] rungs=[F1^1]", "N=3 m=2 base=[2,1] rungs=[F1^1]", "N=3 m=3 base=[1,1,1] rungs=[E1^1, E2^1]",
                         "N=4 m=2 base=[3,1] rungs=[F1^1]"};
  for (const char* t : texts) {
    Ladder u = Ladder::parse(t);
    auto [a0, a1] = ext_qdim(compile_web(u), compile_web(u));
    auto closed = homology_data(tensor(compile_web(webs::reflect(u), "top", "bot"), compile_web(u, "bot", "top")));
    const int shift = webs::d_norm(u.top()) + webs::d_norm(u.base());
    LaurentPoly b0 = closed.dim0.shifted(shift), b1 = closed.dim1.shifted(shift);
    if (u.base().sum() % 2) std::swap(b0, b1);
    EXPECT_EQ(a0, b0) << t;
    EXPECT_EQ(a1, b1) << t;
  }
}

TEST(Ext, ExclusionPreservesResult) {
  Ladder u = Ladder::parse("N=3 m=2 base=[2,1] rungs=[F1^1]");
  KoszulMF c = tensor(dual(compile_web(u)), compile_web(u));
  auto direct = homology_data(c);
  auto partial = homology_data(exclude_variables(c));
  auto normalized = homology_data(normalize_rows(c));
  EXPECT_EQ(direct.dim0, partial.dim0);
  EXPECT_EQ(direct.dim1, partial.dim1);
  EXPECT_EQ(direct.dim0, normalized.dim0);
  EXPECT_EQ(direct.dim1, normalized.dim1);
}

TEST(Ext, IrreducibleIsReported) {
  auto R = xy_ring();
  auto x = MultiPoly::variable(R, "x"), y = MultiPoly::variable(R, "y");
  KoszulMF m = tensor(koszul(x * y, MultiPoly(R), 4, 0), koszul(MultiPoly(R), x * y + y * y, 0, 4));
  EXPECT_THROW(homology_data(m), IrreducibleToFinite);
  KoszulMF free_var = koszul(MultiPoly(R), x * x, 0, 4);
  EXPECT_THROW(homology_data(free_var), IrreducibleToFinite);
  EXPECT_THROW(homology_data(koszul(x, y)), std::invalid_argument);
}

TEST(Dump, Format) {
  std::string d = dump(mf_edge(1, 2, "top", "bot"));
  EXPECT_EQ(d,
            "ring\n  e1(top): 2 [top 1]\n  e1(bot): 2 [bot 1]\nboundary\n  top size=1 top\n  bot size=1 bottom\nrows\n"
            "  e1(top)^2 + e1(top)*e1(bot) + e1(bot)^2 ; e1(top) - e1(bot)\nqshift 0\nhshift 0\n");
}
