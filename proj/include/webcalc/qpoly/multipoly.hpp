#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace webcalc::qpoly {

struct Variable {
  std::string name;
  int degree = 2;
  // Alphabet tag: the alphabet name and the index j of X_j (empty for untagged variables).
  std::string alphabet;
  int index = 0;

  friend bool operator==(const Variable&, const Variable&) = default;
};

// Ordered list of graded variables.  Compared by value.
class Ring {
 public:
  explicit Ring(std::vector<Variable> vars);

  size_t size() const { return vars_.size(); }
  const Variable& var(size_t i) const { return vars_[i]; }
  const std::vector<Variable>& vars() const { return vars_; }
  std::optional<size_t> find(const std::string& name) const;
  size_t index_of(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
  std::unordered_map<std::string, size_t> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Variable> vars);
// Variables of a followed by those of b not already present (matched by name).
RingPtr ring_union(const RingPtr& a, const RingPtr& b);
bool same_ring(const RingPtr& a, const RingPtr& b);

using Exponent = std::vector<int>;

class MultiPoly {
 public:
  explicit MultiPoly(RingPtr ring);
  MultiPoly(RingPtr ring, std::int64_t c);

  static MultiPoly variable(RingPtr ring, size_t i);
  static MultiPoly variable(RingPtr ring, const std::string& name);

  const RingPtr& ring() const { return ring_; }
  const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::int64_t constant_term() const;
  std::int64_t coeff(const Exponent& e) const;
  void add_term(const Exponent& e, std::int64_t c);

  int monomial_degree(const Exponent& e) const;
  bool is_homogeneous() const;
  // Degree of a homogeneous nonzero polynomial; nullopt otherwise.
  std::optional<int> degree() const;
  bool uses(size_t var) const;
  std::vector<size_t> used_variables() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a) { return a.scaled(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(std::int64_t c) const;
  MultiPoly pow(int n) const;
  // Replace variable var by g (g over the same ring).
  MultiPoly substitute(size_t var, const MultiPoly& g) const;
  // Simultaneous substitution of all variables; images over a common target ring.
  MultiPoly compose(const std::vector<MultiPoly>& images, const RingPtr& target) const;
  // Re-express over a ring containing every used variable (matched by name).
  MultiPoly rebase(const RingPtr& target) const;
  std::int64_t evaluate(const std::vector<std::int64_t>& values) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::map<Exponent, std::int64_t> terms_;
};

bool try_divide(const MultiPoly& num, const MultiPoly& den, MultiPoly& out);
// Throws NonExactDivision when den does not divide num.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

}  // namespace webcalc::qpoly
