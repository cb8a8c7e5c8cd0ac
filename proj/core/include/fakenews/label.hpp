#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace fakenews {

// FAKE is the positive class everywhere: precision/recall, +1 in linear models.
enum class Label : unsigned char { Fake = 0, Real = 1 };

inline constexpr std::array<Label, 2> kAllLabels{Label::Fake, Label::Real};

constexpr std::string_view to_string(Label label) noexcept {
  return label == Label::Fake ? "FAKE" : "REAL";
}

// Parses the canonical spellings "FAKE" / "REAL" only.
std::optional<Label> parse_label(std::string_view text) noexcept;

constexpr int to_sign(Label label) noexcept { return label == Label::Fake ? +1 : -1; }

constexpr std::size_t index_of(Label label) noexcept { return static_cast<std::size_t>(label); }

constexpr Label flip(Label label) noexcept {
  return label == Label::Fake ? Label::Real : Label::Fake;
}

}  // namespace fakenews
