#include "webcalc/repfun/fock.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>

namespace webcalc::repfun {

std::vector<int> subset_members(Subset s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i + 1);
  return out;
}

Subset subset_of(const std::vector<int>& members) {
  Subset s = 0;
  for (int i : members) s |= Subset{1} << (i - 1);
  return s;
}

int subset_size(Subset s) { return std::popcount(s); }

std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_members(s)) {
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::vector<Subset> subsets_lex(int N, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > N) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(subset_of(cur));
      return;
    }
    for (int i = start; i <= N; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

FockBasis::FockBasis(int N, std::vector<int> factors) : N_(N), factors_(std::move(factors)) {
  if (N_ < 1 || N_ > 31) throw std::invalid_argument("FockBasis: N outside [1,31]");
  std::vector<std::vector<Subset>> choices;
  for (int k : factors_) {
    if (k < 0 || k > N_) throw std::invalid_argument("FockBasis: factor size outside [0,N]");
    choices.push_back(subsets_lex(N_, k));
  }
  Element cur;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == choices.size()) {
      index_.emplace(cur, elements_.size());
      elements_.push_back(cur);
      return;
    }
    for (Subset s : choices[i]) {
      cur.push_back(s);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

std::optional<size_t> FockBasis::find(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t FockBasis::index_of(const Element& e) const {
  auto i = find(e);
  if (!i) throw std::out_of_range("element not in basis");
  return *i;
}

std::string FockBasis::legend(size_t i) const {
  std::string s;
  const Element& e = elements_.at(i);
  for (size_t j = 0; j < e.size(); ++j) s += (j ? "|" : "") + subset_to_string(e[j]);
  return s;
}

std::string FockBasis::header() const {
  std::string s = "N=" + std::to_string(N_) + " factors=[";
  for (size_t i = 0; i < factors_.size(); ++i) s += (i ? "," : "") + std::to_string(factors_[i]);
  return s + "]";
}

BasisPtr fock_basis(int N, const std::vector<int>& factors) {
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<int>>, BasisPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(N, factors);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto b = std::make_shared<const FockBasis>(N, factors);
  cache.emplace(std::move(key), b);
  return b;
}

}  // namespace webcalc::repfun
