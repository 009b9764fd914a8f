#pragma once

#include <string>

#include "webcalc/mfcore/koszul.hpp"
#include "webcalc/webs/ladder.hpp"

namespace webcalc::mf {

// Edge factorization of thickness k from alphabet `bottom` (2) up to `top` (1).
KoszulMF mf_edge(int k, int N, const std::string& top, const std::string& bottom);

// Merge of in1 (k1) and in2 (k2) into top (k1+k2); carries the shift {-k1 k2}.
KoszulMF mf_merge(int k1, int k2, int N, const std::string& top, const std::string& in1, const std::string& in2);

// Split of bottom (k1+k2) into out1 (k1) and out2 (k2).
KoszulMF mf_split(int k1, int k2, int N, const std::string& out1, const std::string& out2, const std::string& bottom);

// Boundary alphabets are <bottom>.i and <top>.i; internal ones get fresh names.
KoszulMF compile_web(const webs::Ladder& u, const std::string& bottom = "bot", const std::string& top = "top");

KoszulMF rename_alphabet(const KoszulMF& m, const std::string& from, const std::string& to);

}  // namespace webcalc::mf
