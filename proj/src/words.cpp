#include "haarcay/words.hpp"

#include <cctype>
#include <deque>

#include "haarcay/error.hpp"

namespace haarcay {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view word, const std::string& why) {
  throw PreconditionError("bad word '" + std::string(word) + "': " + why);
}

}  // namespace

Element evaluate_word(const GroupTable& h, std::string_view word) {
  const std::string_view w = trim(word);
  if (w.empty()) bad(word, "empty");
  if (w == "1" || w == "e") return kIdentity;
  Element acc = kIdentity;
  std::size_t i = 0;
  while (i < w.size()) {
    char c = w[i++];
    if (!std::isalpha(static_cast<unsigned char>(c))) bad(word, std::string("unexpected '") + c + "'");
    bool inverted = std::isupper(static_cast<unsigned char>(c));
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto g = h.generator(std::string(1, lower));
    if (!g) bad(word, std::string("unknown generator '") + lower + "'");
    long long e = 1;
    if (i < w.size() && w[i] == '^') ++i;
    if (i < w.size() && (w[i] == '-' || std::isdigit(static_cast<unsigned char>(w[i])))) {
      bool neg = w[i] == '-';
      if (neg) ++i;
      if (i >= w.size() || !std::isdigit(static_cast<unsigned char>(w[i]))) bad(word, "missing exponent");
      e = 0;
      while (i < w.size() && std::isdigit(static_cast<unsigned char>(w[i]))) {
        e = e * 10 + (w[i++] - '0');
        if (e > 1'000'000'000) bad(word, "exponent too large");
      }
      if (neg) e = -e;
    } else if (i > 0 && w[i - 1] == '^') {
      bad(word, "missing exponent");
    }
    if (inverted) e = -e;
    acc = h.mul(acc, h.pow(*g, e));
  }
  return acc;
}

ElementSet parse_word_set(const GroupTable& h, std::string_view words) {
  ElementSet s(h.order());
  if (trim(words).empty()) return s;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = words.find(',', start);
    std::string_view part = trim(words.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (part.empty()) bad(words, "empty entry");
    s.insert(evaluate_word(h, part));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return s;
}

std::string word_for(const GroupTable& h, Element x) {
  if (x == kIdentity) return "1";
  std::vector<std::pair<Element, std::string>> letters;
  for (const auto& g : h.gens()) {
    if (g.label.size() != 1) continue;
    letters.emplace_back(g.element, g.label);
    letters.emplace_back(h.inv(g.element), std::string(1, static_cast<char>(std::toupper(g.label[0]))));
  }
  std::vector<std::string> word(h.order());
  std::vector<bool> seen(h.order(), false);
  std::deque<Element> q{kIdentity};
  seen[kIdentity] = true;
  while (!q.empty()) {
    Element y = q.front();
    q.pop_front();
    if (y == x) return word[y];
    for (const auto& [g, l] : letters) {
      Element z = h.mul(y, g);
      if (seen[z]) continue;
      seen[z] = true;
      word[z] = word[y] + l;
      q.push_back(z);
    }
  }
  throw PreconditionError("element not reachable from the named generators");
}

}  // namespace haarcay
