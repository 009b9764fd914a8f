#pragma once

#include <string>
#include <vector>

#include "webcalc/qpoly/laurent.hpp"
#include "webcalc/webs/ladder.hpp"

namespace webcalc::relations {

enum class Rule { Digon, OppositeDigon, Associativity, ParallelSquare, OppositeSquare };

std::string rule_name(Rule r);
Rule rule_from_name(const std::string& name);
std::vector<Rule> all_rules();

// Labels a, b (and c, s, t as the rule needs).  Orientation:
//   opposite-digon  Minus: base (N,a), F^(b) then E^(b); Plus: base (a,N), E^(b) then F^(b)
//   parallel-square Plus: E^(s) then E^(t) on (a,b);  Minus: F^(s) then F^(t)
//   opposite-square Minus: F^(s) then E^(t) on (a,b); Plus: E^(s) then F^(t)
struct RelationInstance {
  Rule rule = Rule::Digon;
  int a = 0, b = 0, c = 0, s = 0, t = 0;
  webs::Sign orientation = webs::Sign::Minus;

  std::string labels() const;
};

// Both sides as ladder combinations; an empty side stands for the zero web.
struct RelationSides {
  webs::WebLinComb lhs, rhs;
};

RelationSides relation_sides(const RelationInstance& inst, int N);
bool verify_relation(const RelationInstance& inst, int N);

std::vector<RelationInstance> admissible_instances(Rule rule, int N);

struct SweepResult {
  RelationInstance instance;
  int N = 0;
  bool pass = false;
  std::string line() const;
};

std::vector<SweepResult> sweep(int N, const std::vector<Rule>& rules);

// Collapses opposite rung pairs whose expansion has strictly fewer rungs in every term.
webs::WebLinComb simplify(const webs::WebLinComb& w);

// alpha with u = alpha w_Lambda for a closed ladder on a highest weight.
qpoly::LaurentPoly reduce_to_highest(const webs::Ladder& u);

}  // namespace webcalc::relations
