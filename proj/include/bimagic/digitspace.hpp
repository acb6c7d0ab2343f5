#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bimagic {

// Exact accumulator for line sums and sums of squares. Entry values stay
// below 10^18, so a 128-bit accumulator holds any sum a supported grid can
// produce.
using Wide = __int128;

std::string to_string(Wide value);

// Widest entry whose value still fits a signed 64-bit integer.
inline constexpr int kMaxWidth = 18;

// Ordered set of distinct decimal digits admissible in entries.
class Alphabet {
 public:
  // Sorts into canonical ascending order; rejects duplicates, out-of-range
  // digits and the empty set.
  explicit Alphabet(std::vector<int> digits);

  // Parses a compact form such as "012".
  static Alphabet parse(std::string_view text);

  const std::vector<int>& digits() const { return digits_; }
  int size() const { return static_cast<int>(digits_.size()); }
  bool contains(int digit) const;
  int digit_sum() const;
  int square_sum() const;
  std::string to_string() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<int> digits_;
};

// Fixed-width decimal digit string. Leading zeros are significant: "000"
// and "0" are different entries.
class Entry {
 public:
  Entry() = default;

  // Accepts 1..kMaxWidth ASCII digits.
  static Entry parse(std::string_view text);

  int width() const { return static_cast<int>(text_.size()); }
  int digit(int position) const { return text_[position] - '0'; }
  const std::string& text() const { return text_; }
  std::int64_t value() const;

  friend bool operator==(const Entry&, const Entry&) = default;
  friend auto operator<=>(const Entry&, const Entry&) = default;

 private:
  explicit Entry(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

std::int64_t entry_value(const Entry& entry);

// Every width-digit string over the alphabet, lexicographic order.
std::vector<Entry> enumerate_entries(const Alphabet& alphabet, int width);

// |alphabet|^width, or nullopt when it overflows 64 bits.
std::optional<std::int64_t> complete_set_size(const Alphabet& alphabet,
                                              int width);

// Line constants forced by the complete digit-string set.
struct SumTargets {
  Wide s1 = 0;
  Wide s2 = 0;

  friend bool operator==(const SumTargets&, const SumTargets&) = default;
};

// Sums the complete set directly and divides by order. Throws ShapeError
// unless |alphabet|^width == order^2.
SumTargets sum_targets(const Alphabet& alphabet, int width, int order);

// Same constants from per-position digit totals: no enumeration.
SumTargets sum_targets_by_position(const Alphabet& alphabet, int width,
                                   int order);

// 11...1 with `width` ones.
Wide repunit(int width);

// Constants printed alongside the three reference squares. A constant may
// have been printed more than once with different digits.
struct PublishedConstants {
  int order = 0;
  Alphabet alphabet{std::vector<int>{0}};
  int width = 0;
  std::vector<std::string> s1;
  std::vector<std::string> s2;
};

// Known for (binary, 6, 8), (binary, 8, 16) and (ternary, 4, 9).
std::optional<PublishedConstants> published_constants(const Alphabet& alphabet,
                                                      int width, int order);
std::optional<PublishedConstants> published_constants(int order);

}  // namespace bimagic

namespace bimagic {

// One printed value of S1 or S2 compared against the computed one.
struct PublishedComparison {
  std::string constant;  // "S1" or "S2"
  std::string printed;
  std::string computed;
  bool matches = false;
};

// Empty when no constants are on record for this digit set.
std::vector<PublishedComparison> compare_with_published(
    const Alphabet& alphabet, int width, int order,
    std::optional<Wide> s1, std::optional<Wide> s2);

}  // namespace bimagic
