#include "webcalc/webs/ladder.hpp"

#include <cctype>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "webcalc/errors.hpp"

namespace webcalc::webs {

std::string Rung::to_string() const {
  return std::string(sign == Sign::Plus ? "E" : "F") + std::to_string(pos) + "^" + std::to_string(thickness);
}

std::optional<GlWeight> apply_rung(const GlWeight& k, const Rung& r) {
  if (r.pos < 1 || r.pos >= k.m()) throw std::invalid_argument("rung position outside [1, m-1]");
  if (r.thickness < 1) throw std::invalid_argument("rung thickness must be positive");
  std::vector<int> v = k.k();
  const int a = r.sign == Sign::Plus ? r.thickness : -r.thickness;
  v[static_cast<size_t>(r.pos - 1)] += a;
  v[static_cast<size_t>(r.pos)] -= a;
  for (int x : v)
    if (x < 0 || x > k.N()) return std::nullopt;
  return GlWeight(k.N(), std::move(v));
}

Ladder::Ladder(GlWeight base, std::vector<Rung> rungs)
    : base_(std::move(base)), rungs_(std::move(rungs)), levels_{base_} {
  for (const auto& r : rungs_) {
    auto next = apply_rung(levels_.back(), r);
    if (!next) throw ZeroWeight("rung " + r.to_string() + " leaves the N-bounded weights at " + levels_.back().to_string());
    levels_.push_back(*next);
  }
}

std::optional<Ladder> Ladder::make(GlWeight base, std::vector<Rung> rungs) {
  GlWeight cur = base;
  for (const auto& r : rungs) {
    auto next = apply_rung(cur, r);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return Ladder(std::move(base), std::move(rungs));
}

std::string Ladder::to_string() const {
  std::string s = "N=" + std::to_string(N()) + " m=" + std::to_string(m()) + " base=" + base_.to_string() + " rungs=[";
  for (size_t i = 0; i < rungs_.size(); ++i) s += (i ? ", " : "") + rungs_[i].to_string();
  return s + "]";
}

namespace {

std::vector<int> parse_int_list(const std::string& body) {
  std::vector<int> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    for (size_t i = used; i < item.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(item[i]))) throw ParseError("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

const std::regex& rung_token() {
  static const std::regex re(R"(\s*([EF])\s*(\d+)\s*(?:\^\s*(\d+))?\s*)");
  return re;
}

}  // namespace

Ladder Ladder::parse(std::string_view text) {
  static const std::regex re(
      R"(\s*N\s*=\s*(\d+)\s+m\s*=\s*(\d+)\s+base\s*=\s*\[([^\]]*)\]\s+rungs\s*=\s*\[([^\]]*)\]\s*)");
  std::string s(text);
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) throw ParseError("ladder: cannot parse '" + s + "'");
  try {
    const int N = std::stoi(mt[1]);
    const int m = std::stoi(mt[2]);
    std::vector<int> base = parse_int_list(mt[3]);
    if (static_cast<int>(base.size()) != m) throw ParseError("ladder: base has " + std::to_string(base.size()) + " entries, expected m=" + std::to_string(m));
    std::vector<Rung> rungs;
    std::string body = mt[4];
    std::stringstream ss(body);
    std::string item;
    bool any = body.find_first_not_of(" \t") != std::string::npos;
    while (any && std::getline(ss, item, ',')) {
      std::smatch rm;
      if (!std::regex_match(item, rm, rung_token())) throw ParseError("ladder: bad rung '" + item + "'");
      Rung r;
      r.sign = rm[1] == "E" ? Sign::Plus : Sign::Minus;
      r.pos = std::stoi(rm[2]);
      r.thickness = rm[3].matched ? std::stoi(rm[3]) : 1;
      if (r.pos < 1 || r.pos >= m) throw ParseError("ladder: rung position out of range in '" + item + "'");
      if (r.thickness < 1) throw ParseError("ladder: rung thickness must be positive");
      rungs.push_back(r);
    }
    return Ladder(GlWeight(N, std::move(base)), std::move(rungs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("ladder: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(std::string("ladder: ") + e.what());
  }
}

std::vector<SeqItem> parse_sequence(std::string_view text) {
  std::vector<SeqItem> out;
  std::string s(text);
  static const std::regex tok(R"(([EF])(\d+)(?:\^(\d+))?)");
  std::string compact;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*' && c != ',') compact += c;
  auto begin = std::sregex_iterator(compact.begin(), compact.end(), tok);
  size_t covered = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    if (static_cast<size_t>(it->position()) != covered) throw ParseError("sequence: cannot parse '" + s + "'");
    covered += static_cast<size_t>(it->length());
    SeqItem item;
    item.sign = (*it)[1] == "E" ? Sign::Plus : Sign::Minus;
    item.index = std::stoi((*it)[2]);
    item.power = (*it)[3].matched ? std::stoi((*it)[3]) : 1;
    if (item.index < 1 || item.power < 1) throw ParseError("sequence: index and power must be positive");
    out.push_back(item);
  }
  if (covered != compact.size()) throw ParseError("sequence: cannot parse '" + s + "'");
  return out;
}

std::string sequence_to_string(const std::vector<SeqItem>& seq) {
  std::string s;
  for (size_t i = 0; i < seq.size(); ++i) {
    s += (i ? " " : "");
    s += seq[i].sign == Sign::Plus ? "E" : "F";
    s += std::to_string(seq[i].index) + "^" + std::to_string(seq[i].power);
  }
  return s;
}

std::optional<Ladder> ladder_from_sequence(const std::vector<SeqItem>& seq, const GlWeight& base) {
  std::vector<Rung> rungs;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (it->index < 1 || it->index >= base.m()) throw std::invalid_argument("sequence index outside [1, m-1]");
    if (it->power < 1) throw std::invalid_argument("sequence power must be positive");
    rungs.push_back({it->index, it->sign, it->power});
  }
  return Ladder::make(base, std::move(rungs));
}

std::optional<Ladder> ladder_from_sequence(const std::vector<SeqItem>& seq, const SlWeight& lambda, int m,
                                           int d, int N) {
  auto base = phi(lambda, m, d, N);
  if (!base) return std::nullopt;
  return ladder_from_sequence(seq, *base);
}

Ladder compose(const Ladder& upper, const Ladder& lower) {
  if (!(lower.top() == upper.base()))
    throw WeightMismatch("compose: lower top " + lower.top().to_string() + " differs from upper base " +
                         upper.base().to_string());
  std::vector<Rung> rungs = lower.rungs();
  rungs.insert(rungs.end(), upper.rungs().begin(), upper.rungs().end());
  return Ladder(lower.base(), std::move(rungs));
}

Ladder reflect(const Ladder& u) {
  std::vector<Rung> rungs;
  for (auto it = u.rungs().rbegin(); it != u.rungs().rend(); ++it) rungs.push_back({it->pos, flip(it->sign), it->thickness});
  return Ladder(u.top(), std::move(rungs));
}

WebLinComb::WebLinComb(const Ladder& u, qpoly::LaurentPoly c) { add(u, c); }

void WebLinComb::add(const Ladder& u, const qpoly::LaurentPoly& c) {
  if (c.is_zero()) return;
  if (!terms_.empty()) {
    const Ladder& ref = terms_.begin()->first;
    if (!(ref.base() == u.base()) || !(ref.top() == u.top()))
      throw WeightMismatch("linear combination terms must share boundary weights");
  }
  auto [it, inserted] = terms_.emplace(u, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void WebLinComb::add(const WebLinComb& w, const qpoly::LaurentPoly& c) {
  for (const auto& [u, x] : w.terms_) add(u, x * c);
}

std::string WebLinComb::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [u, c] : terms_) {
    if (!s.empty()) s += "\n";
    s += "(" + c.to_string() + ") " + u.to_string();
  }
  return s;
}

}  // namespace webcalc::webs
