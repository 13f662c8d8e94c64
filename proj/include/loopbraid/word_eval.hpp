#pragma once
/**
 * @file word_eval.hpp
 * @brief Parser and evaluator for loop-braid generator words.
 *
 * Word grammar (the CLI wire format):
 *
 *   word  := token*                 tokens separated by whitespace
 *   token := ("x" | "s") digits ("^-1")?
 *
 * "x" denotes a pass-through generator sigma_i, "s" an exchange generator
 * s_j ("sigma" itself is awkward to type in shells). Indices are 1-based.
 * The empty string is the empty word. Parsing is case-sensitive; errors
 * carry the byte offset of the offending character.
 *
 * Evaluation follows the library-wide composition order: the leftmost
 * letter acts first, so "g1 g2" evaluates to matrix(g2) * matrix(g1).
 * Inverse letters use the cached matrix inverse of the generator; when the
 * representation's double braiding is trivial the exchange generators are
 * involutions and s^-1 reuses the s matrix directly.
 */

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "loopbraid/loop_rep.hpp"
#include "loopbraid/matrix.hpp"

namespace loopbraid {

/** Word syntax error, pointing at the offending byte. */
struct ParseError : UsageError {
  std::size_t offset = 0;
  ParseError(const std::string& message, std::size_t at)
      : UsageError("parse error at byte " + std::to_string(at) + ": " + message), offset(at) {}
};

/** One letter of a loop-braid word. */
struct WordLetter {
  bool is_sigma = true;  ///< true = sigma ("x"), false = exchange ("s")
  int index = 1;         ///< 1-based generator index
  int exponent = +1;     ///< +1 or -1
};

/** A word in the loop-braid generators, leftmost letter first. */
struct LoopBraidWord {
  std::vector<WordLetter> letters;
};

/**
 * @brief Parse a word in the grammar above.
 * @throws ParseError with byte offset on any syntax violation.
 */
inline LoopBraidWord parse_word(const std::string& text) {
  LoopBraidWord word;
  std::size_t i = 0;
  const std::size_t size = text.size();
  const auto is_space = [&](std::size_t at) {
    return std::isspace(static_cast<unsigned char>(text[at])) != 0;
  };
  const auto is_digit = [&](std::size_t at) {
    return std::isdigit(static_cast<unsigned char>(text[at])) != 0;
  };
  while (i < size) {
    if (is_space(i)) {
      ++i;
      continue;
    }
    WordLetter letter;
    const char kind = text[i];
    if (kind != 'x' && kind != 's')
      throw ParseError("expected generator letter 'x' or 's'", i);
    letter.is_sigma = (kind == 'x');
    ++i;
    if (i >= size || !is_digit(i)) throw ParseError("expected a generator index", i);
    long index = 0;
    while (i < size && is_digit(i)) {
      index = index * 10 + (text[i] - '0');
      if (index > 1000000) throw ParseError("generator index is absurdly large", i);
      ++i;
    }
    if (index < 1) throw ParseError("generator indices start at 1", i - 1);
    letter.index = static_cast<int>(index);
    if (i < size && text[i] == '^') {
      if (text.compare(i, 3, "^-1") != 0) throw ParseError("expected \"^-1\"", i);
      letter.exponent = -1;
      i += 3;
    }
    if (i < size && !is_space(i)) throw ParseError("unexpected character inside token", i);
    word.letters.push_back(letter);
  }
  return word;
}

/** Render a word back into the grammar (inverse of parse_word up to spacing). */
inline std::string to_string(const LoopBraidWord& word) {
  std::string out;
  for (const WordLetter& l : word.letters) {
    if (!out.empty()) out += ' ';
    out += l.is_sigma ? 'x' : 's';
    out += std::to_string(l.index);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

/** The group inverse: letters reversed, exponents flipped. */
inline LoopBraidWord inverse_word(const LoopBraidWord& word) {
  LoopBraidWord inv;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    inv.letters.push_back({it->is_sigma, it->index, -it->exponent});
  return inv;
}

/**
 * @brief Evaluate a word in a representation: the product of generator
 *        matrices with the leftmost letter acting first.
 * @throws UsageError when a letter's index exceeds the representation's range.
 */
inline Mat evaluate(const LBRep& rep, const LoopBraidWord& word) {
  Mat acc = Mat::identity(rep.basis.size());
  std::vector<std::optional<Mat>> sigma_inv(rep.sigma.size()), s_inv(rep.s.size());
  for (const WordLetter& l : word.letters) {
    if (l.index < 1 || l.index > rep.n - 1)
      throw UsageError("generator index " + std::to_string(l.index) +
                       " out of range for n = " + std::to_string(rep.n));
    const std::size_t k = static_cast<std::size_t>(l.index - 1);
    const Mat* factor = nullptr;
    if (l.exponent > 0) {
      factor = l.is_sigma ? &rep.sigma[k] : &rep.s[k];
    } else if (!l.is_sigma && rep.double_braiding.trivial) {
      factor = &rep.s[k];  // exchanges are involutions under the symmetric condition
    } else {
      auto& slot = l.is_sigma ? sigma_inv[k] : s_inv[k];
      if (!slot) slot = (l.is_sigma ? rep.sigma[k] : rep.s[k]).inverse();
      factor = &*slot;
    }
    acc = (*factor) * acc;
  }
  return acc;
}

}  // namespace loopbraid
