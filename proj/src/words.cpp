#include "orbilef/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>

#include "orbilef/error.hpp"

namespace orbilef {

namespace {

constexpr std::string_view kSuperInverse = "⁻¹";  // ⁻¹

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '*'; }

} // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& labels) {
  Word word;
  auto trimmed = text;
  while (!trimmed.empty() && is_blank(trimmed.front()))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && is_blank(trimmed.back()))
    trimmed.remove_suffix(1);
  bool declared_e = std::find(labels.begin(), labels.end(), "e") != labels.end();
  bool declared_1 = std::find(labels.begin(), labels.end(), "1") != labels.end();
  if (trimmed.empty() || (trimmed == "e" && !declared_e) || (trimmed == "1" && !declared_1))
    return word;

  std::vector<int> by_length(labels.size());
  for (size_t i = 0; i < labels.size(); ++i)
    by_length[i] = int(i);
  std::stable_sort(by_length.begin(), by_length.end(), [&](int a, int b) {
    return labels[a].size() > labels[b].size();
  });

  size_t pos = 0;
  while (pos < text.size()) {
    if (is_blank(text[pos])) {
      ++pos;
      continue;
    }
    int found = -1;
    for (int i : by_length) {
      const std::string& l = labels[i];
      if (!l.empty() && text.compare(pos, l.size(), l) == 0) {
        found = i;
        break;
      }
    }
    if (found < 0)
      fail(ErrorCode::ValidationError,
           "undefined generator label at '" + std::string(text.substr(pos)) +
           "' in word '" + std::string(text) + "'");
    pos += labels[found].size();
    Letter letter{found, false};
    long power = 1;
    if (pos < text.size() && text[pos] == '^') {
      size_t end = pos + 1;
      if (end < text.size() && text[end] == '-')
        ++end;
      size_t digits = end;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
        ++end;
      if (end == digits || end - digits > 4)
        fail(ErrorCode::ValidationError, "bad exponent at '" + std::string(text.substr(pos)) +
             "' in word '" + std::string(text) + "'");
      power = std::stol(std::string(text.substr(pos + 1, end - pos - 1)));
      pos = end;
    } else if (text.compare(pos, kSuperInverse.size(), kSuperInverse) == 0) {
      power = -1;
      pos += kSuperInverse.size();
    }
    letter.inverse = power < 0;
    for (long k = 0; k < std::labs(power); ++k)
      word.push_back(letter);
  }
  return word;
}

std::string format_word(const Word& w, const std::vector<std::string>& labels) {
  if (w.empty())
    return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += ' ';
    out += labels.at(size_t(w[i].generator));
    if (w[i].inverse)
      out += "^-1";
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out)
    l.inverse = !l.inverse;
  return out;
}

} // namespace orbilef
