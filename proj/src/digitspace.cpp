#include "bimagic/digitspace.hpp"

#include <algorithm>
#include <limits>

#include "bimagic/errors.hpp"

namespace bimagic {

std::string to_string(Wide value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string out;
  while (value != 0) {
    int rem = static_cast<int>(value % 10);
    out.push_back(static_cast<char>('0' + (negative ? -rem : rem)));
    value /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Alphabet::Alphabet(std::vector<int> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw InputError("alphabet must not be empty");
  for (int d : digits_) {
    if (d < 0 || d > 9)
      throw InputError("alphabet digit out of range: " + std::to_string(d));
  }
  std::sort(digits_.begin(), digits_.end());
  if (std::adjacent_find(digits_.begin(), digits_.end()) != digits_.end())
    throw InputError("alphabet digits must be distinct");
}

Alphabet Alphabet::parse(std::string_view text) {
  std::vector<int> digits;
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw InputError("alphabet must consist of decimal digits, got '" +
                       std::string(text) + "'");
    digits.push_back(ch - '0');
  }
  return Alphabet(std::move(digits));
}

bool Alphabet::contains(int digit) const {
  return std::binary_search(digits_.begin(), digits_.end(), digit);
}

int Alphabet::digit_sum() const {
  int total = 0;
  for (int d : digits_) total += d;
  return total;
}

int Alphabet::square_sum() const {
  int total = 0;
  for (int d : digits_) total += d * d;
  return total;
}

std::string Alphabet::to_string() const {
  std::string out;
  for (int d : digits_) out.push_back(static_cast<char>('0' + d));
  return out;
}

Entry Entry::parse(std::string_view text) {
  if (text.empty()) throw InputError("entry must have at least one digit");
  if (static_cast<int>(text.size()) > kMaxWidth)
    throw InputError("entry wider than " + std::to_string(kMaxWidth) +
                     " digits");
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw InputError("entry must consist of decimal digits, got '" +
                       std::string(text) + "'");
  }
  return Entry(std::string(text));
}

std::int64_t Entry::value() const {
  std::int64_t v = 0;
  for (char ch : text_) v = v * 10 + (ch - '0');
  return v;
}

std::int64_t entry_value(const Entry& entry) { return entry.value(); }

std::optional<std::int64_t> complete_set_size(const Alphabet& alphabet,
                                              int width) {
  std::int64_t size = 1;
  for (int k = 0; k < width; ++k) {
    if (size > std::numeric_limits<std::int64_t>::max() / alphabet.size())
      return std::nullopt;
    size *= alphabet.size();
  }
  return size;
}

std::vector<Entry> enumerate_entries(const Alphabet& alphabet, int width) {
  if (width < 1 || width > kMaxWidth)
    throw InputError("width must be in 1.." + std::to_string(kMaxWidth) +
                     ", got " + std::to_string(width));
  auto size = complete_set_size(alphabet, width);
  if (!size || *size > (std::int64_t{1} << 26))
    throw InputError("complete digit set too large to enumerate");

  const auto& digits = alphabet.digits();
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(*size));
  // Odometer over digit indices, most significant position first.
  std::vector<int> index(static_cast<std::size_t>(width), 0);
  std::string text(static_cast<std::size_t>(width),
                   static_cast<char>('0' + digits.front()));
  for (;;) {
    out.push_back(Entry::parse(text));
    int pos = width - 1;
    while (pos >= 0 && index[pos] + 1 == alphabet.size()) {
      index[pos] = 0;
      text[pos] = static_cast<char>('0' + digits.front());
      --pos;
    }
    if (pos < 0) break;
    ++index[pos];
    text[pos] = static_cast<char>('0' + digits[index[pos]]);
  }
  return out;
}

namespace {

void require_square_shape(const Alphabet& alphabet, int width, int order) {
  if (order < 1) throw ShapeError("order must be positive");
  if (width < 1 || width > kMaxWidth)
    throw InputError("width must be in 1.." + std::to_string(kMaxWidth));
  auto size = complete_set_size(alphabet, width);
  if (!size || *size != std::int64_t{order} * order)
    throw ShapeError("|alphabet|^width must equal order^2: alphabet " +
                     alphabet.to_string() + ", width " +
                     std::to_string(width) + ", order " +
                     std::to_string(order));
}

Wide exact_divide(Wide total, int order, const char* what) {
  if (total % order != 0)
    throw ShapeError(std::string(what) + " total " + to_string(total) +
                     " not divisible by order " + std::to_string(order) +
                     "; no magic arrangement exists");
  return total / order;
}

Wide power(Wide base, int exponent) {
  Wide out = 1;
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

}  // namespace

SumTargets sum_targets(const Alphabet& alphabet, int width, int order) {
  require_square_shape(alphabet, width, order);
  Wide total = 0;
  Wide total_sq = 0;
  for (const Entry& e : enumerate_entries(alphabet, width)) {
    const Wide v = e.value();
    total += v;
    total_sq += v * v;
  }
  return {exact_divide(total, order, "S1"), exact_divide(total_sq, order, "S2")};
}

Wide repunit(int width) {
  Wide out = 0;
  for (int k = 0; k < width; ++k) out = out * 10 + 1;
  return out;
}

SumTargets sum_targets_by_position(const Alphabet& alphabet, int width,
                                   int order) {
  require_square_shape(alphabet, width, order);
  const Wide a = alphabet.size();
  const Wide sum = alphabet.digit_sum();
  const Wide sq = alphabet.square_sum();

  // Each position sees every digit |A|^(w-1) times; two distinct positions
  // see every digit pair |A|^(w-2) times.
  const Wide total = power(a, width - 1) * sum * repunit(width);

  Wide diagonal = 0;
  Wide cross = 0;
  for (int k = 0; k < width; ++k) {
    for (int l = 0; l < width; ++l) {
      const Wide weight = power(10, k + l);
      if (k == l)
        diagonal += weight;
      else
        cross += weight;
    }
  }
  Wide total_sq = power(a, width - 1) * sq * diagonal;
  if (width >= 2) total_sq += power(a, width - 2) * sum * sum * cross;

  return {exact_divide(total, order, "S1"), exact_divide(total_sq, order, "S2")};
}

std::optional<PublishedConstants> published_constants(const Alphabet& alphabet,
                                                      int width, int order) {
  auto known = published_constants(order);
  if (known && known->alphabet == alphabet && known->width == width)
    return known;
  return std::nullopt;
}

std::optional<PublishedConstants> published_constants(int order) {
  switch (order) {
    case 8:
      return PublishedConstants{8, Alphabet({0, 1}), 6, {"44444"},
                                {"44893328844"}};
    case 16:
      return PublishedConstants{16, Alphabet({0, 1}), 8, {"88888888"},
                                {"897867554657688"}};
    case 9:
      return PublishedConstants{9, Alphabet({0, 1, 2}), 4, {"9999"},
                                {"17169395", "17169495"}};
    default:
      return std::nullopt;
  }
}

}  // namespace bimagic

namespace bimagic {

std::vector<PublishedComparison> compare_with_published(
    const Alphabet& alphabet, int width, int order, std::optional<Wide> s1,
    std::optional<Wide> s2) {
  std::vector<PublishedComparison> out;
  auto known = published_constants(alphabet, width, order);
  if (!known) return out;
  auto add = [&out](const char* name, const std::vector<std::string>& prints,
                    std::optional<Wide> value) {
    if (!value) return;
    const std::string computed = to_string(*value);
    for (const auto& printed : prints)
      out.push_back({name, printed, computed, printed == computed});
  };
  add("S1", known->s1, s1);
  add("S2", known->s2, s2);
  return out;
}

}  // namespace bimagic
