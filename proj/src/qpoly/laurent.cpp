#include "webcalc/qpoly/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "webcalc/errors.hpp"

namespace webcalc::qpoly {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

LaurentPoly::LaurentPoly(std::int64_t c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coeff) {
  if (coeff == 0) return {};
  return LaurentPoly(std::vector<Term>{{exponent, coeff}});
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.back().first;
}

std::int64_t LaurentPoly::sum_of_coefficients() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

namespace {

std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, int sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : -b[j].second);
      ++j;
    } else {
      std::int64_t c = sign > 0 ? checked_add(a[i].second, b[j].second)
                                : checked_add(a[i].second, -b[j].second);
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    auto [e, c] = b.terms_[0];
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.terms_.size());
    for (const auto& [ea, ca] : a.terms_) out.emplace_back(ea + e, checked_mul(ca, c));
    return LaurentPoly(std::move(out));
  }
  if (a.terms_.size() == 1) return b * a;
  int lo = a.min_exponent() + b.min_exponent();
  int hi = a.max_exponent() + b.max_exponent();
  std::vector<std::int64_t> dense(static_cast<size_t>(hi - lo + 1), 0);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto& slot = dense[static_cast<size_t>(ea + eb - lo)];
      slot = checked_add(slot, checked_mul(ca, cb));
    }
  std::vector<LaurentPoly::Term> out;
  for (size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(lo + static_cast<int>(i), dense[i]);
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) { return a.scaled(-1); }

LaurentPoly LaurentPoly::shifted(int e) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.first += e;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::scaled(std::int64_t c) const {
  if (c == 0) return {};
  std::vector<Term> out = terms_;
  for (auto& t : out) t.second = checked_mul(t.second, c);
  return LaurentPoly(std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (it == terms_.rbegin()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag) + "*";
    s += "q";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view t) : text_(t) {}

  LaurentPoly run() {
    LaurentPoly out;
    skip();
    if (done()) fail("empty input");
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += parse_term().scaled(sign);
      first = false;
      skip();
    }
    return out;
  }

 private:
  LaurentPoly parse_term() {
    std::int64_t coeff = 1;
    bool has_number = false;
    if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_uint();
      has_number = true;
      skip();
      if (!done() && peek() == '*') {
        ++pos_;
        skip();
        if (done() || peek() != 'q') fail("expected 'q' after '*'");
      }
    }
    if (!done() && peek() == 'q') {
      ++pos_;
      int e = 1;
      skip();
      if (!done() && peek() == '^') {
        ++pos_;
        skip();
        int s = 1;
        if (!done() && (peek() == '-' || peek() == '+')) {
          s = peek() == '-' ? -1 : 1;
          ++pos_;
        }
        e = s * static_cast<int>(parse_uint());
      }
      return LaurentPoly::monomial(e, coeff);
    }
    if (!has_number) fail("expected a term");
    return LaurentPoly(coeff);
  }

  std::int64_t parse_uint() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::int64_t v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = checked_add(checked_mul(v, 10), peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("laurent polynomial: " + what + " at offset " + std::to_string(pos_) +
                     " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return TermParser(text).run(); }

LaurentPoly bar(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out += LaurentPoly::monomial(-e, c);
  return out;
}

bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& out) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  out = LaurentPoly();
  if (a.is_zero()) return true;
  LaurentPoly rem = a;
  const int bt = b.max_exponent();
  const std::int64_t bc = b.coeff(bt);
  const int span = b.max_exponent() - b.min_exponent();
  while (!rem.is_zero()) {
    if (rem.max_exponent() - rem.min_exponent() < span) return false;
    const int rt = rem.max_exponent();
    const std::int64_t rc = rem.coeff(rt);
    if (rc % bc != 0) return false;
    LaurentPoly t = LaurentPoly::monomial(rt - bt, rc / bc);
    out += t;
    rem -= t * b;
  }
  return true;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (!try_divide(a, b, out))
    throw NonExactDivision("(" + a.to_string() + ") / (" + b.to_string() + ") is not exact");
  return out;
}

LaurentPoly qint(int n) {
  if (n < 0) throw std::invalid_argument("qint: negative argument " + std::to_string(n));
  LaurentPoly out;
  for (int j = 0; j < n; ++j) out += LaurentPoly::monomial(n - 1 - 2 * j);
  return out;
}

LaurentPoly qint_signed(int n) { return n >= 0 ? qint(n) : -qint(-n); }

LaurentPoly qfactorial(int n) {
  if (n < 0) throw std::invalid_argument("qfactorial: negative argument " + std::to_string(n));
  LaurentPoly out(1);
  for (int j = 2; j <= n; ++j) out *= qint(j);
  return out;
}

LaurentPoly qbinom(int n, int k) {
  if (k < 0 || k > n)
    throw std::invalid_argument("qbinom: k=" + std::to_string(k) + " outside [0," + std::to_string(n) + "]");
  return divide_exact(qfactorial(n), qfactorial(k) * qfactorial(n - k));
}

LaurentPoly qbinom_general(int n, int k) {
  if (k < 0) throw std::invalid_argument("qbinom_general: negative k");
  LaurentPoly num(1);
  for (int j = 0; j < k; ++j) num *= qint_signed(n - j);
  return divide_exact(num, qfactorial(k));
}

}  // namespace webcalc::qpoly
