#include "nagasent/tokenizer.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>

#include "nagasent/error.hpp"

namespace nagasent {
namespace {

constexpr UChar32 kWhiteSmiling = 0x263A;   // ☺
constexpr UChar32 kWhiteFrowning = 0x2639;  // ☹
constexpr UChar32 kVariationSelector16 = 0xFE0F;

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || n == nullptr) throw ComputeError("ICU NFC normalizer unavailable");
  return *n;
}

icu::UnicodeString to_nfc(const icu::UnicodeString& s) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = nfc().normalize(s, status);
  if (U_FAILURE(status)) throw ComputeError("ICU normalization failed");
  return out;
}

std::u32string to_code_points(const icu::UnicodeString& s) {
  std::u32string out;
  out.reserve(static_cast<std::size_t>(s.length()));
  for (int32_t i = 0; i < s.length(); i = s.moveIndex32(i, 1)) {
    out.push_back(static_cast<char32_t>(s.char32At(i)));
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string utf8(std::u32string_view cps) {
  std::string out;
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

bool is_word_char(char32_t cp) {
  const auto c = static_cast<UChar32>(cp);
  if (u_isalnum(c)) return true;
  const int8_t type = u_charType(c);
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK ||
         type == U_ENCLOSING_MARK;
}

bool is_joiner(char32_t cp) { return cp == U'-' || cp == U'\'' || cp == U'’'; }

// Length of an emoticon starting at `i`, or 0. Sets `kind`.
std::size_t match_emoticon(std::u32string_view chunk, std::size_t i, TokenKind& kind) {
  const char32_t c = chunk[i];
  if (c == static_cast<char32_t>(kWhiteSmiling) || c == static_cast<char32_t>(kWhiteFrowning)) {
    kind = c == static_cast<char32_t>(kWhiteSmiling) ? TokenKind::emoticon_positive
                                                     : TokenKind::emoticon_negative;
    return 1;
  }
  if (c != U':') return 0;
  auto rest = chunk.substr(i);
  if (rest.starts_with(U":-)")) return kind = TokenKind::emoticon_positive, 3;
  if (rest.starts_with(U":-(")) return kind = TokenKind::emoticon_negative, 3;
  if (rest.starts_with(U":)")) return kind = TokenKind::emoticon_positive, 2;
  if (rest.starts_with(U":(")) return kind = TokenKind::emoticon_negative, 2;
  // ":D" is lowercase after normalization; "a:do" is not an emoticon.
  if (rest.starts_with(U":d") && (rest.size() == 2 || !is_word_char(rest[2]))) {
    return kind = TokenKind::emoticon_positive, 2;
  }
  return 0;
}

void tokenize_chunk(std::u32string_view chunk, std::vector<Token>& out) {
  std::size_t i = 0;
  while (i < chunk.size()) {
    TokenKind kind{};
    if (const std::size_t len = match_emoticon(chunk, i, kind)) {
      out.push_back({utf8(chunk.substr(i, len)), kind});
      i += len;
      if (i < chunk.size() && chunk[i] == static_cast<char32_t>(kVariationSelector16)) ++i;
      continue;
    }
    if (is_word_char(chunk[i])) {
      const std::size_t start = i;
      ++i;
      while (i < chunk.size()) {
        if (is_word_char(chunk[i])) {
          ++i;
        } else if (is_joiner(chunk[i]) && i + 1 < chunk.size() && is_word_char(chunk[i + 1])) {
          i += 2;
        } else {
          break;
        }
      }
      out.push_back({utf8(chunk.substr(start, i - start)), TokenKind::word});
      continue;
    }
    const char32_t c = chunk[i];
    const TokenKind punct = c == U'!'   ? TokenKind::exclamation
                            : c == U'?' ? TokenKind::question
                                        : TokenKind::other_punct;
    out.push_back({utf8(chunk.substr(i, 1)), punct});
    ++i;
    if (i < chunk.size() && chunk[i] == static_cast<char32_t>(kVariationSelector16)) ++i;
  }
}

}  // namespace

std::string normalize(std::string_view text) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  s = to_nfc(s);
  s.toLower(icu::Locale::getRoot());
  s = to_nfc(s);

  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (int32_t i = 0; i < s.length(); i = s.moveIndex32(i, 1)) {
    const UChar32 c = s.char32At(i);
    if (u_isUWhiteSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    append_utf8(out, static_cast<char32_t>(c));
  }
  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  const std::string norm = normalize(text);
  const std::u32string cps = to_code_points(icu::UnicodeString::fromUTF8(norm));
  std::vector<Token> tokens;
  std::size_t start = 0;
  while (start < cps.size()) {
    std::size_t end = cps.find(U' ', start);
    if (end == std::u32string::npos) end = cps.size();
    tokenize_chunk(std::u32string_view(cps).substr(start, end - start), tokens);
    start = end + 1;
  }
  return tokens;
}

std::size_t word_count(std::span<const Token> tokens) noexcept {
  return static_cast<std::size_t>(std::count_if(
      tokens.begin(), tokens.end(), [](const Token& t) { return t.kind == TokenKind::word; }));
}

}  // namespace nagasent
