#include "webcalc/webs/weight.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "webcalc/errors.hpp"

namespace webcalc::webs {

GlWeight::GlWeight(int N, std::vector<int> k) : N_(N), k_(std::move(k)) {
  if (N_ < 2) throw std::invalid_argument("N must be at least 2");
  if (k_.empty()) throw std::invalid_argument("weight must have at least one entry");
  for (int x : k_)
    if (x < 0 || x > N_) throw std::invalid_argument("weight entry " + std::to_string(x) + " outside [0,N]");
}

int GlWeight::sum() const { return std::accumulate(k_.begin(), k_.end(), 0); }

std::string GlWeight::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < k_.size(); ++i) s += (i ? "," : "") + std::to_string(k_[i]);
  return s + "]";
}

std::optional<GlWeight> phi(const SlWeight& lambda, int m, int d, int N) {
  if (m < 1 || static_cast<int>(lambda.lambda.size()) != m - 1)
    throw std::invalid_argument("phi: lambda must have m-1 entries");
  // k_i = k_m + sum_{j >= i} lambda_j, so sum k = m k_m + sum_j j lambda_j.
  long long weighted = 0;
  for (int j = 1; j < m; ++j) weighted += static_cast<long long>(j) * lambda.lambda[static_cast<size_t>(j - 1)];
  long long rest = d - weighted;
  if (rest % m != 0) return std::nullopt;
  std::vector<int> k(static_cast<size_t>(m));
  long long cur = rest / m;
  for (int i = m; i >= 1; --i) {
    if (i < m) cur += lambda.lambda[static_cast<size_t>(i - 1)];
    if (cur < 0 || cur > N) return std::nullopt;
    k[static_cast<size_t>(i - 1)] = static_cast<int>(cur);
  }
  return GlWeight(N, std::move(k));
}

SlWeight sl_weight_of(const GlWeight& k) {
  SlWeight s;
  for (int i = 0; i + 1 < k.m(); ++i) s.lambda.push_back(k[i] - k[i + 1]);
  return s;
}

std::vector<GlWeight> enumerate_weights(int m, int d, int N) {
  std::vector<GlWeight> out;
  std::vector<int> k(static_cast<size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m - 1) {
      if (left <= N) {
        k[static_cast<size_t>(i)] = left;
        out.emplace_back(N, k);
      }
      return;
    }
    for (int v = std::min(N, left); v >= 0; --v) {
      k[static_cast<size_t>(i)] = v;
      rec(i + 1, left - v);
    }
  };
  if (m >= 1 && d >= 0) rec(0, d);
  return out;
}

GlWeight highest_weight(int N, int m, int l) {
  if (l < 0 || l > m) throw std::invalid_argument("highest_weight: l outside [0,m]");
  std::vector<int> k(static_cast<size_t>(m), 0);
  for (int i = 0; i < l; ++i) k[static_cast<size_t>(i)] = N;
  return GlWeight(N, std::move(k));
}

bool is_highest_pattern(const GlWeight& k) {
  bool seen_zero = false;
  for (int x : k.k()) {
    if (x == 0) {
      seen_zero = true;
    } else if (x != k.N() || seen_zero) {
      return false;
    }
  }
  return true;
}

int d_norm(const GlWeight& k) {
  const int N = k.N();
  if (k.sum() % N != 0) throw NonIntegral("d_norm: weight sum is not a multiple of N");
  const int l = k.sum() / N;
  long long twice = static_cast<long long>(N) * (N - 1) * l;
  for (int x : k.k()) twice -= static_cast<long long>(x) * (x - 1);
  if (twice % 2 != 0) throw NonIntegral("d_norm: odd numerator");
  return static_cast<int>(twice / 2);
}

}  // namespace webcalc::webs
