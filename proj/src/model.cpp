#include "hg/model.h"

#include <fmt/format.h>

#include <cctype>
#include <set>
#include <sstream>

namespace hg {

SplittingModel::SplittingModel(int genus) : genus_(genus) {
  if (genus < 2) fail_input("genus must be at least 2");
  if (4 * genus > static_cast<int>(kMaxLetters)) fail_input("genus too large");
  const int n = 4 * genus;

  // R = a1 b1 A1 B1 a2 b2 A2 B2 ...
  relator_.reserve(n);
  for (int i = 0; i < genus; ++i) {
    const Letter ai = static_cast<Letter>(4 * i);
    const Letter bi = static_cast<Letter>(4 * i + 2);
    relator_.push_back(ai);
    relator_.push_back(bi);
    relator_.push_back(inverse(ai));
    relator_.push_back(inverse(bi));
  }

  for (int i = 0; i < n; ++i) relator_pos_[relator_[i]] = i;
  for (int i = 0; i < n; ++i) {
    const Letter x = relator_[i];
    const Letter y = relator_[(i + 1) % n];
    relator_succ_[x] = y;
    // In R^-1 = ... x^-1 ... the letter after y^-1 is x^-1.
    relator_inv_succ_[inverse(y)] = inverse(x);
  }

  // Small-cancellation check: the 8g cyclic length-2 subwords of R and R^-1
  // must be pairwise distinct, i.e. all pieces have length exactly 1. This is
  // the license for Dehn's algorithm and for every certified bound below.
  std::set<std::pair<Letter, Letter>> seen;
  for (int i = 0; i < n; ++i) {
    const Letter x = relator_[i];
    const Letter y = relator_[(i + 1) % n];
    if (!seen.insert({x, y}).second) fail_defect("relator has a repeated 2-subword");
    pair_family_[x][y] = 1;
  }
  for (int i = 0; i < n; ++i) {
    const Letter x = relator_[i];
    const Letter y = relator_[(i + 1) % n];
    if (!seen.insert({inverse(y), inverse(x)}).second)
      fail_defect("relator pieces longer than 1");
    pair_family_[inverse(y)][inverse(x)] = -1;
  }

  // Rotation system: counterclockwise successor of germ R_i is R_{i-1}^-1.
  for (int i = 0; i < n; ++i) {
    const Letter x = relator_[i];
    const Letter prev = relator_[(i + n - 1) % n];
    ccw_next_[x] = inverse(prev);
  }
  // Must be a single 4g-cycle for the one-vertex structure to embed.
  {
    Letter cur = relator_[0];
    for (int steps = 1; steps < n; ++steps) {
      cur = ccw_next_[cur];
      if (cur == relator_[0]) fail_defect("rotation system is not a single cycle");
    }
    if (ccw_next_[cur] != relator_[0]) fail_defect("rotation system is not a permutation cycle");
  }
  for (int x = 0; x < n; ++x) {
    Letter cur = static_cast<Letter>(x);
    for (int d = 0; d < n; ++d) {
      ccw_rank_[x][cur] = static_cast<std::uint8_t>(d);
      cur = ccw_next_[cur];
    }
  }
}

Letter SplittingModel::a(int i) const {
  if (i < 1 || i > genus_) fail_input(fmt::format("handle index {} out of range", i));
  return static_cast<Letter>(4 * (i - 1));
}

Letter SplittingModel::b(int i) const {
  if (i < 1 || i > genus_) fail_input(fmt::format("handle index {} out of range", i));
  return static_cast<Letter>(4 * (i - 1) + 2);
}

std::vector<Letter> SplittingModel::parse(const std::string& text) const {
  std::vector<Letter> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
      fail_input(fmt::format("bad word token '{}'", tok));
    const char c = tok[0];
    const char base = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (base != 'a' && base != 'b') fail_input(fmt::format("bad word token '{}'", tok));
    int idx = 0;
    for (size_t k = 1; k < tok.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(tok[k])))
        fail_input(fmt::format("bad word token '{}'", tok));
      idx = idx * 10 + (tok[k] - '0');
    }
    if (idx < 1 || idx > genus_)
      fail_input(fmt::format("token '{}' exceeds genus {}", tok, genus_));
    Letter l = (base == 'a') ? a(idx) : b(idx);
    if (std::isupper(static_cast<unsigned char>(c))) l = inverse(l);
    out.push_back(l);
  }
  return out;
}

std::string SplittingModel::letter_name(Letter x) const {
  const int gi = generator_index(x);
  const int handle = gi / 2 + 1;
  char c = (gi % 2 == 0) ? 'a' : 'b';
  if (is_inverse_letter(x)) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return fmt::format("{}{}", c, handle);
}

std::string SplittingModel::print(const std::vector<Letter>& word) const {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += letter_name(word[i]);
  }
  return out;
}

int SplittingModel::infer_genus(const std::string& text) {
  int max_idx = 2;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2) continue;
    int idx = 0;
    bool digits = true;
    for (size_t k = 1; k < tok.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(tok[k]))) { digits = false; break; }
      idx = idx * 10 + (tok[k] - '0');
    }
    if (digits && idx > max_idx) max_idx = idx;
  }
  return max_idx;
}

}  // namespace hg
