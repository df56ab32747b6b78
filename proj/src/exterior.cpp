#include "invh11/exterior.hpp"

#include <algorithm>

namespace invh11 {

std::string frame_name(FrameTag f) {
  switch (f) {
    case FrameTag::Real: return "real";
    case FrameTag::Complex: return "complex";
    case FrameTag::Unitary: return "unitary";
  }
  return "?";
}

FrameTag parse_frame(const std::string& name) {
  if (name == "real") return FrameTag::Real;
  if (name == "complex") return FrameTag::Complex;
  if (name == "unitary") return FrameTag::Unitary;
  throw std::invalid_argument("unknown frame '" + name + "'");
}

BasisWord BasisWord::from_letters(const std::vector<int>& letters) {
  std::uint8_t mask = 0;
  int prev = -1;
  for (int l : letters) {
    if (l < 0 || l > 3) throw std::out_of_range("letter out of range");
    if (l <= prev) throw std::invalid_argument("letters must be strictly increasing");
    mask |= static_cast<std::uint8_t>(1u << l);
    prev = l;
  }
  return BasisWord(mask);
}

std::vector<int> BasisWord::letters() const {
  std::vector<int> out;
  for (int l = 0; l < 4; ++l)
    if (contains(l)) out.push_back(l);
  return out;
}

namespace {

std::array<int, 16> canonical_ranks() {
  std::array<int, 16> masks{};
  for (int m = 0; m < 16; ++m) masks[m] = m;
  auto key = [](int m) {
    BasisWord w(static_cast<std::uint8_t>(m));
    return std::make_pair(w.degree(), w.letters());
  };
  std::sort(masks.begin(), masks.end(), [&](int a, int b) { return key(a) < key(b); });
  std::array<int, 16> rank{};
  for (int i = 0; i < 16; ++i) rank[masks[i]] = i;
  return rank;
}

}  // namespace

bool operator<(BasisWord a, BasisWord b) {
  static const std::array<int, 16> rank = canonical_ranks();
  return rank[a.mask()] < rank[b.mask()];
}

std::string BasisWord::label(FrameTag frame) const {
  if (mask_ == 0) return "1";
  std::string s;
  if (frame == FrameTag::Real) {
    s = "e^{";
    for (int l : letters()) s += std::to_string(l + 1);
    return s + "}";
  }
  s = frame == FrameTag::Complex ? "phi^{" : "psi^{";
  bool first = true;
  for (int l : letters()) {
    if (!first) s += " ";
    first = false;
    s += std::to_string(l % 2 + 1);
    if (l >= 2) s += "b";
  }
  return s + "}";
}

BasisWord parse_word(const std::string& label, FrameTag frame) {
  if (label == "1") return BasisWord{};
  std::string prefix = frame == FrameTag::Real ? "e^{" : frame == FrameTag::Complex ? "phi^{" : "psi^{";
  if (label.rfind(prefix, 0) != 0 || label.back() != '}') {
    throw std::invalid_argument("bad basis word '" + label + "'");
  }
  std::string body = label.substr(prefix.size(), label.size() - prefix.size() - 1);
  std::vector<int> letters;
  if (frame == FrameTag::Real) {
    for (char c : body) {
      if (c < '1' || c > '4') throw std::invalid_argument("bad basis word '" + label + "'");
      letters.push_back(c - '1');
    }
  } else {
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      if (c == ' ') continue;
      if (c != '1' && c != '2') throw std::invalid_argument("bad basis word '" + label + "'");
      int l = c - '1';
      if (i + 1 < body.size() && body[i + 1] == 'b') {
        l += 2;
        ++i;
      }
      letters.push_back(l);
    }
  }
  return BasisWord::from_letters(letters);
}

std::vector<BasisWord> words_of_degree(int degree) {
  std::vector<BasisWord> out;
  for (unsigned m = 0; m < 16; ++m) {
    BasisWord w(static_cast<std::uint8_t>(m));
    if (w.degree() == degree) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [](BasisWord a, BasisWord b) { return a < b; });
  return out;
}

std::vector<BasisWord> words_of_bidegree(int p, int q) {
  std::vector<BasisWord> out;
  for (BasisWord w : words_of_degree(p + q)) {
    if (w.holomorphic_degree() == p && w.antiholomorphic_degree() == q) out.push_back(w);
  }
  return out;
}

int sign_of_merge(BasisWord w1, BasisWord w2) {
  if (w1.mask() & w2.mask()) return 0;
  int inversions = 0;
  for (int a : w1.letters())
    for (int b : w2.letters())
      if (a > b) ++inversions;
  return inversions % 2 ? -1 : 1;
}

int sequence_sign(const std::vector<int>& letters) {
  int inversions = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      if (letters[i] == letters[j]) return 0;
      if (letters[i] > letters[j]) ++inversions;
    }
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace invh11
