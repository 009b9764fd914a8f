#include "webcalc/qpoly/symmetric.hpp"

#include <stdexcept>
#include <string>

namespace webcalc::qpoly {

MultiPoly power_sum_from(int p, const std::vector<MultiPoly>& e, const RingPtr& ring) {
  if (p < 1) throw std::invalid_argument("power_sum: p must be positive");
  const int k = static_cast<int>(e.size());
  auto el = [&](int i) { return i <= k ? e[static_cast<size_t>(i - 1)] : MultiPoly(ring); };
  std::vector<MultiPoly> ps{MultiPoly(ring)};
  for (int n = 1; n <= p; ++n) {
    MultiPoly v(ring);
    for (int i = 1; i < n && i <= k; ++i) {
      MultiPoly t = el(i) * ps[static_cast<size_t>(n - i)];
      v += (i % 2 == 1) ? t : -t;
    }
    if (n <= k) v += el(n).scaled(n % 2 == 1 ? n : -n);
    ps.push_back(std::move(v));
  }
  return ps[static_cast<size_t>(p)];
}

MultiPoly power_sum_in_e(int p, int k) {
  if (k < 1) throw std::invalid_argument("power_sum_in_e: k must be positive");
  std::vector<Variable> vars;
  for (int j = 1; j <= k; ++j) vars.push_back({"e" + std::to_string(j), 2 * j, "e", j});
  RingPtr ring = make_ring(std::move(vars));
  std::vector<MultiPoly> e;
  for (int j = 0; j < k; ++j) e.push_back(MultiPoly::variable(ring, static_cast<size_t>(j)));
  return power_sum_from(p, e, ring);
}

MultiPoly x_series_from(const std::vector<std::pair<int, std::vector<MultiPoly>>>& alphabets, int j,
                        const RingPtr& ring) {
  if (j < 0) throw std::invalid_argument("x_series: negative degree");
  std::vector<MultiPoly> acc{MultiPoly(ring, 1)};
  for (int d = 1; d <= j; ++d) acc.emplace_back(ring);
  for (const auto& [sign, gens] : alphabets) {
    const int k = static_cast<int>(gens.size());
    std::vector<MultiPoly> series{MultiPoly(ring, 1)};
    for (int d = 1; d <= j; ++d) {
      MultiPoly c(ring);
      if (sign > 0) {
        if (d <= k) c = gens[static_cast<size_t>(d - 1)];
      } else {
        for (int b = 1; b <= d && b <= k; ++b) c -= gens[static_cast<size_t>(b - 1)] * series[static_cast<size_t>(d - b)];
      }
      series.push_back(std::move(c));
    }
    std::vector<MultiPoly> next;
    for (int d = 0; d <= j; ++d) {
      MultiPoly c(ring);
      for (int b = 0; b <= d; ++b) {
        const auto& x = series[static_cast<size_t>(b)];
        const auto& y = acc[static_cast<size_t>(d - b)];
        if (!x.is_zero() && !y.is_zero()) c += x * y;
      }
      next.push_back(std::move(c));
    }
    acc = std::move(next);
  }
  return acc[static_cast<size_t>(j)];
}

MultiPoly x_series_component(const std::vector<std::pair<int, int>>& signs_and_sizes, int j) {
  std::vector<Variable> vars;
  for (size_t a = 0; a < signs_and_sizes.size(); ++a) {
    if (signs_and_sizes[a].second < 0) throw std::invalid_argument("x_series_component: negative size");
    for (int b = 1; b <= signs_and_sizes[a].second; ++b) {
      std::string alpha = "a" + std::to_string(a + 1);
      vars.push_back({alpha + ".e" + std::to_string(b), 2 * b, alpha, b});
    }
  }
  RingPtr ring = make_ring(std::move(vars));
  std::vector<std::pair<int, std::vector<MultiPoly>>> alphabets;
  size_t next = 0;
  for (const auto& [sign, size] : signs_and_sizes) {
    std::vector<MultiPoly> gens;
    for (int b = 0; b < size; ++b) gens.push_back(MultiPoly::variable(ring, next++));
    alphabets.emplace_back(sign, std::move(gens));
  }
  return x_series_from(alphabets, j, ring);
}

}  // namespace webcalc::qpoly
