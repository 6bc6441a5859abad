#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace farey {

using Int = std::int64_t;

// Largest sequence order accepted by the generators. Terms of any supported
// sequence satisfy k <= kMaxOrder, so matrix images (|entries| <= 3) and
// cross products stay far inside 64 bits.
inline constexpr Int kMaxOrder = 10'000;

// A reduced fraction h/k in [0/1, 1/1].
class Fraction {
 public:
  constexpr Fraction() = default;

  constexpr Int h() const noexcept { return h_; }
  constexpr Int k() const noexcept { return k_; }

  friend constexpr bool operator==(const Fraction&, const Fraction&) = default;
  friend constexpr std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) noexcept {
    const __int128 lhs = static_cast<__int128>(x.h_) * y.k_;
    const __int128 rhs = static_cast<__int128>(y.h_) * x.k_;
    return lhs <=> rhs;
  }

 private:
  constexpr Fraction(Int h, Int k) noexcept : h_(h), k_(k) {}

  friend constexpr Fraction make_fraction(Int h, Int k);
  friend constexpr Fraction make_reduced_fraction(Int h, Int k);

  Int h_ = 0;
  Int k_ = 1;
};

// Canonicalizes h/k. Throws std::invalid_argument for k < 1, h < 0, or a
// value above 1/1.
constexpr Fraction make_fraction(Int h, Int k) {
  if (k < 1) throw std::invalid_argument("fraction denominator must be positive");
  if (h < 0) throw std::invalid_argument("fraction numerator must be nonnegative");
  if (h > k) throw std::invalid_argument("fraction exceeds 1/1");
  const Int g = std::gcd(h, k);
  return Fraction(h / g, k / g);
}

// Accepts only an already reduced pair; used where reducedness is a
// mathematical guarantee whose failure indicates a bug.
constexpr Fraction make_reduced_fraction(Int h, Int k) {
  if (k < 1 || h < 0 || h > k) throw std::domain_error("pair outside [0/1, 1/1]");
  if (std::gcd(h, k) != 1) {
    throw std::logic_error("pair " + std::to_string(h) + "/" + std::to_string(k) + " is not reduced");
  }
  return Fraction(h, k);
}

constexpr std::strong_ordering compare(const Fraction& x, const Fraction& y) noexcept { return x <=> y; }

inline constexpr Fraction kZero = make_fraction(0, 1);
inline constexpr Fraction kHalf = make_fraction(1, 2);
inline constexpr Fraction kOne = make_fraction(1, 1);

inline std::string to_string(const Fraction& f) { return std::to_string(f.h()) + "/" + std::to_string(f.k()); }

inline std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.h() << '/' << f.k(); }

// Parses "h/k" with decimal digits only; the result is reduced.
inline Fraction parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw std::invalid_argument("expected h/k, got '" + std::string(text) + "'");
  auto parse_part = [&](std::string_view part) {
    Int value = 0;
    const auto* first = part.data();
    const auto* last = part.data() + part.size();
    if (part.empty() || part.front() == '-' || part.front() == '+') {
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    return value;
  };
  return make_fraction(parse_part(text.substr(0, slash)), parse_part(text.substr(slash + 1)));
}

// 2x2 integer matrix acting on column vectors [h k]^T.
struct UnimodularMap {
  Int a = 1, b = 0, c = 0, d = 1;

  constexpr Int determinant() const noexcept { return a * d - b * c; }
  constexpr bool is_unimodular() const noexcept { return determinant() == 1 || determinant() == -1; }

  friend constexpr bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

constexpr UnimodularMap operator*(const UnimodularMap& x, const UnimodularMap& y) noexcept {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

constexpr UnimodularMap negate(const UnimodularMap& x) noexcept { return {-x.a, -x.b, -x.c, -x.d}; }

inline constexpr UnimodularMap kIdentityMap{1, 0, 0, 1};

constexpr bool equal_up_to_sign(const UnimodularMap& x, const UnimodularMap& y) noexcept {
  return x == y || x == negate(y);
}

// Integer inverse; requires determinant +-1.
constexpr UnimodularMap inverse(const UnimodularMap& x) {
  const Int det = x.determinant();
  if (det != 1 && det != -1) throw std::domain_error("matrix is not unimodular");
  return {x.d * det, -x.b * det, -x.c * det, x.a * det};
}

inline std::string to_string(const UnimodularMap& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
         std::to_string(m.d) + "]]";
}

// Image of f under M. The image of a reduced pair under a unimodular matrix is
// reduced, so gcd = 1 is asserted (std::logic_error) instead of restored.
// std::domain_error means f lies outside the map's domain.
constexpr Fraction apply_map(const UnimodularMap& m, const Fraction& f) {
  const __int128 num = static_cast<__int128>(m.a) * f.h() + static_cast<__int128>(m.b) * f.k();
  const __int128 den = static_cast<__int128>(m.c) * f.h() + static_cast<__int128>(m.d) * f.k();
  if (den <= 0) throw std::domain_error("image of " + to_string(f) + " has nonpositive denominator");
  if (num < 0 || num > den) throw std::domain_error("image of " + to_string(f) + " lies outside [0/1, 1/1]");
  return make_reduced_fraction(static_cast<Int>(num), static_cast<Int>(den));
}

}  // namespace farey
