#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace nagasent {

// Enumerators are declared in lexicographic order of their names so that the
// enum order, the sorted label order used by the models, and the report order
// all coincide.
enum class Polarity { negative, neutral, positive };

enum class Emotion { anger, anticipation, disgust, fear, joy, sadness, surprise, trust };

inline constexpr std::array<Polarity, 3> kAllPolarities{Polarity::negative, Polarity::neutral,
                                                        Polarity::positive};

inline constexpr std::array<Emotion, 8> kAllEmotions{
    Emotion::anger, Emotion::anticipation, Emotion::disgust,  Emotion::fear,
    Emotion::joy,   Emotion::sadness,      Emotion::surprise, Emotion::trust};

std::string_view to_string(Polarity p) noexcept;
std::string_view to_string(Emotion e) noexcept;

// Case-insensitive; surrounding ASCII whitespace ignored.
std::optional<Polarity> parse_polarity(std::string_view s);
std::optional<Emotion> parse_emotion(std::string_view s);

}  // namespace nagasent
