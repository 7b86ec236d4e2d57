#include "nagasent/labels.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace nagasent {
namespace {

std::string folded(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

template <typename Enum, std::size_t N>
std::optional<Enum> parse_from(std::string_view s, const std::array<Enum, N>& all) {
  const std::string key = folded(s);
  for (Enum e : all) {
    if (to_string(e) == key) return e;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Polarity p) noexcept {
  switch (p) {
    case Polarity::negative: return "negative";
    case Polarity::neutral: return "neutral";
    case Polarity::positive: return "positive";
  }
  return "?";
}

std::string_view to_string(Emotion e) noexcept {
  switch (e) {
    case Emotion::anger: return "anger";
    case Emotion::anticipation: return "anticipation";
    case Emotion::disgust: return "disgust";
    case Emotion::fear: return "fear";
    case Emotion::joy: return "joy";
    case Emotion::sadness: return "sadness";
    case Emotion::surprise: return "surprise";
    case Emotion::trust: return "trust";
  }
  return "?";
}

std::optional<Polarity> parse_polarity(std::string_view s) { return parse_from(s, kAllPolarities); }

std::optional<Emotion> parse_emotion(std::string_view s) { return parse_from(s, kAllEmotions); }

}  // namespace nagasent
