#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "webcalc/qpoly/laurent.hpp"
#include "webcalc/webs/weight.hpp"

namespace webcalc::webs {

enum class Sign : int { Minus = -1, Plus = 1 };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

// Rung between uprights pos and pos+1 (1-based).  Plus moves flow into upright pos.
struct Rung {
  int pos = 1;
  Sign sign = Sign::Plus;
  int thickness = 1;

  std::string to_string() const;
  friend bool operator==(const Rung&, const Rung&) = default;
  friend auto operator<=>(const Rung&, const Rung&) = default;
};

// nullopt is the Zero marker.
std::optional<GlWeight> apply_rung(const GlWeight& k, const Rung& r);

class Ladder {
 public:
  // Throws ZeroWeight when an intermediate weight leaves [0, N].
  Ladder(GlWeight base, std::vector<Rung> rungs = {});
  // Zero marker instead of an exception.
  static std::optional<Ladder> make(GlWeight base, std::vector<Rung> rungs);

  int N() const { return base_.N(); }
  int m() const { return base_.m(); }
  const GlWeight& base() const { return base_; }
  const std::vector<Rung>& rungs() const { return rungs_; }
  const GlWeight& top() const { return levels_.back(); }
  // Weights bottom to top; levels()[i] is below rung i.
  const std::vector<GlWeight>& levels() const { return levels_; }

  std::string to_string() const;
  static Ladder parse(std::string_view text);

  friend bool operator==(const Ladder& a, const Ladder& b) { return a.base_ == b.base_ && a.rungs_ == b.rungs_; }
  friend auto operator<=>(const Ladder& a, const Ladder& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    return a.rungs_ <=> b.rungs_;
  }

 private:
  GlWeight base_;
  std::vector<Rung> rungs_;
  std::vector<GlWeight> levels_;
};

// One factor E_{sign i}^{(power)} of an operator word.
struct SeqItem {
  Sign sign = Sign::Plus;
  int index = 1;
  int power = 1;
  friend bool operator==(const SeqItem&, const SeqItem&) = default;
};

// Words like "E1^2 F2^1" (also "E1" for power 1); rightmost factor acts first.
std::vector<SeqItem> parse_sequence(std::string_view text);
std::string sequence_to_string(const std::vector<SeqItem>& seq);

std::optional<Ladder> ladder_from_sequence(const std::vector<SeqItem>& seq, const SlWeight& lambda, int m,
                                           int d, int N);
std::optional<Ladder> ladder_from_sequence(const std::vector<SeqItem>& seq, const GlWeight& base);

Ladder compose(const Ladder& upper, const Ladder& lower);
Ladder reflect(const Ladder& u);

// Formal Z[q,q^-1]-combination of ladders with common boundary.
class WebLinComb {
 public:
  WebLinComb() = default;
  explicit WebLinComb(const Ladder& u, qpoly::LaurentPoly c = 1);

  void add(const Ladder& u, const qpoly::LaurentPoly& c);
  void add(const WebLinComb& w, const qpoly::LaurentPoly& c = 1);
  const std::map<Ladder, qpoly::LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

  friend bool operator==(const WebLinComb&, const WebLinComb&) = default;

 private:
  std::map<Ladder, qpoly::LaurentPoly> terms_;
};

}  // namespace webcalc::webs
