#include "webcalc/relations/relations.hpp"

#include <algorithm>
#include <stdexcept>

#include "webcalc/errors.hpp"
#include "webcalc/repfun/functor.hpp"

namespace webcalc::relations {

using qpoly::LaurentPoly;
using qpoly::qbinom;
using qpoly::qbinom_general;
using webs::GlWeight;
using webs::Ladder;
using webs::Rung;
using webs::Sign;
using webs::WebLinComb;

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::Digon: return "digon";
    case Rule::OppositeDigon: return "opposite-digon";
    case Rule::Associativity: return "associativity";
    case Rule::ParallelSquare: return "parallel-square";
    case Rule::OppositeSquare: return "opposite-square";
  }
  throw std::logic_error("unknown rule");
}

Rule rule_from_name(const std::string& name) {
  for (Rule r : all_rules())
    if (rule_name(r) == name) return r;
  throw std::invalid_argument("unknown rule '" + name + "'");
}

std::vector<Rule> all_rules() {
  return {Rule::Digon, Rule::OppositeDigon, Rule::Associativity, Rule::ParallelSquare, Rule::OppositeSquare};
}

std::string RelationInstance::labels() const {
  auto kv = [](const char* k, int v) { return std::string(k) + "=" + std::to_string(v); };
  const std::string o = std::string(",orient=") + (orientation == Sign::Plus ? "E" : "F");
  switch (rule) {
    case Rule::Digon: return kv("a", a) + "," + kv("b", b);
    case Rule::OppositeDigon: return kv("a", a) + "," + kv("b", b) + o;
    case Rule::Associativity: return kv("a", a) + "," + kv("b", b) + "," + kv("c", c);
    case Rule::ParallelSquare:
    case Rule::OppositeSquare: return kv("a", a) + "," + kv("b", b) + "," + kv("s", s) + "," + kv("t", t) + o;
  }
  return {};
}

namespace {

// Ladder with thickness-0 rungs dropped; nullopt when not constructible or a weight is invalid.
std::optional<Ladder> build(int N, std::vector<int> base, const std::vector<Rung>& rungs) {
  for (int x : base)
    if (x < 0 || x > N) return std::nullopt;
  std::vector<Rung> kept;
  for (const auto& r : rungs)
    if (r.thickness > 0) kept.push_back(r);
  return Ladder::make(GlWeight(N, std::move(base)), kept);
}

void add_if(WebLinComb& w, const std::optional<Ladder>& u, const LaurentPoly& c) {
  if (u) w.add(*u, c);
}

bool same_value(const WebLinComb& lhs, const WebLinComb& rhs) {
  if (lhs.is_zero() && rhs.is_zero()) return true;
  if (lhs.is_zero()) return repfun::combination_matrix(rhs).is_zero();
  if (rhs.is_zero()) return repfun::combination_matrix(lhs).is_zero();
  return repfun::combination_matrix(lhs) == repfun::combination_matrix(rhs);
}

WebLinComb reflected(const WebLinComb& w) {
  WebLinComb out;
  for (const auto& [u, c] : w.terms()) out.add(webs::reflect(u), c);
  return out;
}

// Expansion of an adjacent opposite pair (lower, upper) at one position acting on k.
std::vector<std::pair<std::vector<Rung>, LaurentPoly>> opposite_pair_expansion(const Rung& lower, const Rung& upper,
                                                                              const GlWeight& k) {
  const int pos = lower.pos;
  const int lam = k[pos - 1] - k[pos];
  const int s = lower.thickness, t = upper.thickness;
  const Sign first = upper.sign, second = lower.sign;
  const int n = lower.sign == Sign::Minus ? lam + t - s : -lam + t - s;
  std::vector<std::pair<std::vector<Rung>, LaurentPoly>> out;
  for (int r = 0; r <= std::min(s, t); ++r) {
    std::vector<Rung> rungs;
    if (t - r > 0) rungs.push_back({pos, first, t - r});
    if (s - r > 0) rungs.push_back({pos, second, s - r});
    LaurentPoly c = qbinom_general(n, r);
    if (!c.is_zero()) out.emplace_back(std::move(rungs), c);
  }
  return out;
}

}  // namespace

RelationSides relation_sides(const RelationInstance& in, int N) {
  RelationSides sides;
  const Sign P = Sign::Plus, M = Sign::Minus;
  switch (in.rule) {
    case Rule::Digon: {
      if (in.a + in.b > N) break;
      // split a+b into (a, b) moving b to an empty neighbour, then merge back
      add_if(sides.lhs, build(N, {in.a + in.b, 0}, {{1, M, in.b}, {1, P, in.b}}), 1);
      add_if(sides.rhs, build(N, {in.a + in.b, 0}, {}), qbinom(in.a + in.b, in.a));
      break;
    }
    case Rule::OppositeDigon: {
      if (in.orientation == M) {
        add_if(sides.lhs, build(N, {N, in.a}, {{1, M, in.b}, {1, P, in.b}}), 1);
        add_if(sides.rhs, build(N, {N, in.a}, {}), in.b <= N - in.a ? qbinom(N - in.a, in.b) : LaurentPoly());
      } else {
        add_if(sides.lhs, build(N, {in.a, N}, {{1, P, in.b}, {1, M, in.b}}), 1);
        add_if(sides.rhs, build(N, {in.a, N}, {}), in.b <= N - in.a ? qbinom(N - in.a, in.b) : LaurentPoly());
      }
      break;
    }
    case Rule::Associativity: {
      if (in.a + in.b + in.c > N) break;
      // ((a b) c) versus (a (b c)), realized with empty uprights
      add_if(sides.lhs, build(N, {in.a, in.b, in.c}, {{1, P, in.b}, {2, P, in.c}, {1, P, in.c}}), 1);
      add_if(sides.rhs, build(N, {in.a, in.b, in.c}, {{2, P, in.c}, {1, P, in.b + in.c}}), 1);
      break;
    }
    case Rule::ParallelSquare: {
      const Sign o = in.orientation;
      add_if(sides.lhs, build(N, {in.a, in.b}, {{1, o, in.s}, {1, o, in.t}}), 1);
      add_if(sides.rhs, build(N, {in.a, in.b}, {{1, o, in.s + in.t}}), qbinom(in.s + in.t, in.t));
      break;
    }
    case Rule::OppositeSquare: {
      if (in.a < 0 || in.a > N || in.b < 0 || in.b > N) break;
      const Sign lower = in.orientation, upper = webs::flip(in.orientation);
      add_if(sides.lhs, build(N, {in.a, in.b}, {{1, lower, in.s}, {1, upper, in.t}}), 1);
      GlWeight k(N, {in.a, in.b});
      for (auto& [rungs, c] : opposite_pair_expansion({1, lower, in.s}, {1, upper, in.t}, k))
        add_if(sides.rhs, build(N, {in.a, in.b}, rungs), c);
      break;
    }
  }
  return sides;
}

bool verify_relation(const RelationInstance& inst, int N) {
  RelationSides sides = relation_sides(inst, N);
  if (!same_value(sides.lhs, sides.rhs)) return false;
  if (inst.rule == Rule::Associativity) {
    // coassociativity of splits is the mirror image
    if (!same_value(reflected(sides.lhs), reflected(sides.rhs))) return false;
  }
  if (inst.rule == Rule::Digon && inst.a + inst.b <= N) {
    repfun::QMatrix d = repfun::merge_matrix(inst.a, inst.b, N) * repfun::split_matrix(inst.a, inst.b, N);
    if (!(d.scalar_multiple_of_identity() == std::optional<LaurentPoly>(qbinom(inst.a + inst.b, inst.a)))) return false;
  }
  return true;
}

std::vector<RelationInstance> admissible_instances(Rule rule, int N) {
  std::vector<RelationInstance> out;
  const Sign P = Sign::Plus, M = Sign::Minus;
  switch (rule) {
    case Rule::Digon:
      for (int a = 0; a <= N; ++a)
        for (int b = 0; a + b <= N; ++b) out.push_back({rule, a, b, 0, 0, 0, M});
      break;
    case Rule::OppositeDigon:
      for (Sign o : {M, P})
        for (int a = 0; a <= N; ++a)
          for (int b = 1; b <= N; ++b) out.push_back({rule, a, b, 0, 0, 0, o});
      break;
    case Rule::Associativity:
      for (int a = 0; a <= N; ++a)
        for (int b = 0; a + b <= N; ++b)
          for (int c = 0; a + b + c <= N; ++c) out.push_back({rule, a, b, c, 0, 0, M});
      break;
    case Rule::ParallelSquare:
    case Rule::OppositeSquare:
      for (Sign o : {M, P})
        for (int a = 0; a <= N; ++a)
          for (int b = 0; b <= N; ++b)
            for (int s = 1; s <= N; ++s)
              for (int t = 1; t <= N; ++t) out.push_back({rule, a, b, 0, s, t, o});
      break;
  }
  return out;
}

std::string SweepResult::line() const {
  return rule_name(instance.rule) + " " + instance.labels() + " N=" + std::to_string(N) + " " + (pass ? "PASS" : "FAIL");
}

std::vector<SweepResult> sweep(int N, const std::vector<Rule>& rules) {
  std::vector<SweepResult> out;
  for (Rule r : rules)
    for (const auto& inst : admissible_instances(r, N)) out.push_back({inst, N, verify_relation(inst, N)});
  return out;
}

namespace {

// One rewrite step on a single ladder; false if no pattern applies.
bool rewrite_once(const Ladder& u, WebLinComb& out) {
  const auto& rungs = u.rungs();
  for (size_t j = 0; j + 1 < rungs.size(); ++j) {
    const Rung& lower = rungs[j];
    const Rung& upper = rungs[j + 1];
    if (lower.pos != upper.pos || lower.sign == upper.sign) continue;
    auto terms = opposite_pair_expansion(lower, upper, u.levels()[j]);
    std::vector<std::pair<Ladder, LaurentPoly>> built;
    bool shrinks = true;
    for (auto& [mid, c] : terms) {
      std::vector<Rung> r(rungs.begin(), rungs.begin() + static_cast<long>(j));
      r.insert(r.end(), mid.begin(), mid.end());
      r.insert(r.end(), rungs.begin() + static_cast<long>(j) + 2, rungs.end());
      auto l = Ladder::make(u.base(), r);
      if (!l) continue;
      if (mid.size() >= 2) shrinks = false;
      built.emplace_back(*l, c);
    }
    if (!shrinks) continue;
    for (auto& [l, c] : built) out.add(l, c);
    return true;
  }
  return false;
}

}  // namespace

WebLinComb simplify(const WebLinComb& w) {
  WebLinComb cur = w;
  for (;;) {
    WebLinComb next;
    bool changed = false;
    for (const auto& [u, c] : cur.terms()) {
      WebLinComb piece;
      if (rewrite_once(u, piece)) {
        next.add(piece, c);
        changed = true;
      } else {
        next.add(u, c);
      }
    }
    if (!changed) return next;
    cur = std::move(next);
  }
}

LaurentPoly reduce_to_highest(const Ladder& u) {
  if (!webs::is_highest_pattern(u.base()))
    throw std::invalid_argument("reduce_to_highest: base " + u.base().to_string() + " is not a highest weight");
  if (!(u.top() == u.base())) throw NotEndomorphism("reduce_to_highest: ladder is not closed");
  LaurentPoly alpha = repfun::web_form(Ladder(u.base()), u);
  for (const auto& [e, c] : alpha.terms())
    if (c < 0) throw NegativeCoefficient("closed ladder " + u.to_string() + " evaluates to " + alpha.to_string());
  return alpha;
}

}  // namespace webcalc::relations
