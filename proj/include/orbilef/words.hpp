// Words over labeled generators, e.g. "uw", "w^-1", "u w⁻¹".
#ifndef ORBILEF_WORDS_HPP_
#define ORBILEF_WORDS_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace orbilef {

struct Letter {
  int generator;
  bool inverse = false;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Labels are matched greedily (longest first).  A letter may be followed by
// an integer exponent "^k" (so "^-1" inverts) or by "⁻¹".  Blanks and '*' separate letters; "e", "1" and the empty
// string denote the empty word unless declared as labels.  Throws
// ValidationError naming the offending token.
Word parse_word(std::string_view text, const std::vector<std::string>& labels);

// Inverse of parse_word; the empty word renders as "e".
std::string format_word(const Word& w, const std::vector<std::string>& labels);

Word inverse_word(const Word& w);

} // namespace orbilef

#endif // ORBILEF_WORDS_HPP_
