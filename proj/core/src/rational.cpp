#include "oldset/rational.hpp"

#include <charconv>

#include "oldset/errors.hpp"

namespace oldset {

namespace {

std::int64_t parse_part(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("malformed rational '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_part(text), 1};
  const auto num = parse_part(text.substr(0, slash));
  const auto den = parse_part(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator");
  return {num, den};
}

}  // namespace oldset
