#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace webcalc::webs {

// N-bounded gl_m weight.
class GlWeight {
 public:
  GlWeight(int N, std::vector<int> k);

  int N() const { return N_; }
  int m() const { return static_cast<int>(k_.size()); }
  const std::vector<int>& k() const { return k_; }
  int operator[](int i) const { return k_[static_cast<size_t>(i)]; }
  int sum() const;
  std::string to_string() const;

  friend bool operator==(const GlWeight&, const GlWeight&) = default;
  friend auto operator<=>(const GlWeight&, const GlWeight&) = default;

 private:
  int N_;
  std::vector<int> k_;
};

struct SlWeight {
  std::vector<int> lambda;
  friend bool operator==(const SlWeight&, const SlWeight&) = default;
};

// nullopt plays the role of the star value.
std::optional<GlWeight> phi(const SlWeight& lambda, int m, int d, int N);
SlWeight sl_weight_of(const GlWeight& k);
std::vector<GlWeight> enumerate_weights(int m, int d, int N);
// Highest weight (N,..,N,0,..,0) with l entries N.
GlWeight highest_weight(int N, int m, int l);
bool is_highest_pattern(const GlWeight& k);
int d_norm(const GlWeight& k);

}  // namespace webcalc::webs
