#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nagasent {

enum class TokenKind {
  word,
  emoticon_positive,
  emoticon_negative,
  exclamation,
  question,
  other_punct,
};

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::word;

  friend bool operator==(const Token&, const Token&) = default;
};

/// NFC, lowercase, whitespace runs collapsed to one space, trimmed.
/// Invalid UTF-8 sequences are replaced by U+FFFD.
std::string normalize(std::string_view text);

/// Splits normalized text into word, emoticon and punctuation tokens.
///
/// Chunks are whitespace separated. Inside a chunk, leading and trailing
/// punctuation is peeled into separate single-character tokens. Letters,
/// digits and combining marks form words; a hyphen or apostrophe between two
/// word characters stays inside the word. `☺`, `:)`, `:-)` and `:D` are
/// positive emoticons, `☹`, `:(` and `:-(` negative ones.
std::vector<Token> tokenize(std::string_view text);

std::size_t word_count(std::span<const Token> tokens) noexcept;

}  // namespace nagasent
