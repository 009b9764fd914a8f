#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace webcalc::repfun {

// Subset of {1..N} as a bit mask, bit i-1 standing for i.
using Subset = std::uint32_t;
// One tensor factor per upright.
using Element = std::vector<Subset>;

std::vector<int> subset_members(Subset s);
Subset subset_of(const std::vector<int>& members);
int subset_size(Subset s);
std::string subset_to_string(Subset s);
// All k-subsets of {1..N} in lexicographic order of their sorted member lists.
std::vector<Subset> subsets_lex(int N, int k);

class FockBasis {
 public:
  FockBasis(int N, std::vector<int> factors);

  int N() const { return N_; }
  const std::vector<int>& factors() const { return factors_; }
  size_t size() const { return elements_.size(); }
  const Element& element(size_t i) const { return elements_[i]; }
  std::optional<size_t> find(const Element& e) const;
  size_t index_of(const Element& e) const;
  std::string legend(size_t i) const;
  std::string header() const;

  friend bool operator==(const FockBasis& a, const FockBasis& b) {
    return a.N_ == b.N_ && a.factors_ == b.factors_;
  }

 private:
  int N_;
  std::vector<int> factors_;
  std::vector<Element> elements_;
  std::map<Element, size_t> index_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

// Shared instance per (N, factors).
BasisPtr fock_basis(int N, const std::vector<int>& factors);

}  // namespace webcalc::repfun
