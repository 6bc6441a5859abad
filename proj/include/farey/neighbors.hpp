#pragma once

#include <farey/fraction.hpp>

#include <stdexcept>
#include <string>

namespace farey {

struct EuclidResult {
  Int gcd;
  Int x;  // a*x + b*y = gcd
  Int y;
};

constexpr EuclidResult extended_gcd(Int a, Int b) noexcept {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  return {old_r, old_x, old_y};
}

// The unique x0 in [lo, hi] with h*x0 == residue_sign (mod modulus), where
// hi - lo + 1 == modulus and residue_sign is +1 or -1.
constexpr Int solve_congruence_in_range(Int h, Int modulus, int residue_sign, Int lo, Int hi) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  if (residue_sign != 1 && residue_sign != -1) throw std::invalid_argument("residue sign must be +1 or -1");
  if (hi - lo + 1 != modulus) throw std::invalid_argument("range length must equal the modulus");
  if (modulus == 1) return lo;
  const auto [g, inv, unused] = extended_gcd(((h % modulus) + modulus) % modulus, modulus);
  (void)unused;
  if (g != 1) throw std::domain_error("h and modulus are not coprime; congruence has no solution");
  // x == residue_sign * inv (mod modulus), then shift into [lo, hi].
  const Int base = ((residue_sign * inv) % modulus + modulus) % modulus;
  const Int offset = ((base - lo) % modulus + modulus) % modulus;
  return lo + offset;
}

inline bool in_farey(const Fraction& f, Int m) noexcept { return f.k() <= m; }

// Membership in F(B(2m), m): h <= m and k - h <= m.
inline bool in_farey_boolean_symmetric(const Fraction& f, Int m) noexcept { return f.h() <= m && f.k() - f.h() <= m; }

namespace detail {

inline void require_order(Int m, Int min_order) {
  if (m < min_order) throw std::invalid_argument("order must be at least " + std::to_string(min_order));
  if (m > kMaxOrder) throw std::invalid_argument("order exceeds supported bound " + std::to_string(kMaxOrder));
}

inline void require_in_farey(const Fraction& f, Int m) {
  if (!in_farey(f, m)) throw std::domain_error(to_string(f) + " is not a term of F_" + std::to_string(m));
}

inline void require_in_boolean(const Fraction& f, Int m) {
  if (!in_farey_boolean_symmetric(f, m)) {
    throw std::domain_error(to_string(f) + " is not a term of F(B(" + std::to_string(2 * m) + ")," +
                            std::to_string(m) + ")");
  }
}

// Exact division checked at every call; the neighbor formulas guarantee it.
inline Int exact_div(Int num, Int den) {
  if (num % den != 0) {
    throw std::logic_error("inexact division " + std::to_string(num) + "/" + std::to_string(den));
  }
  return num / den;
}

// (k - h)/k, the order-reversing involution of F(B(2m), m).
inline Fraction complement(const Fraction& f) { return make_reduced_fraction(f.k() - f.h(), f.k()); }

// Remark (ii) formula, valid for 0/1 <= f < 1/2.
inline Fraction succ_left(const Fraction& f, Int m) {
  const Int h = f.h(), k = f.k(), mod = k - h;
  const Int x0 = solve_congruence_in_range(h, mod, -1, m - mod + 1, m);
  return make_reduced_fraction(exact_div(h * x0 + 1, mod), exact_div(k * x0 + 1, mod));
}

// Remark (i) formula, valid for 0/1 < f <= 1/2.
inline Fraction pred_left(const Fraction& f, Int m) {
  const Int h = f.h(), k = f.k(), mod = k - h;
  const Int x0 = solve_congruence_in_range(h, mod, 1, m - mod + 1, m);
  return make_reduced_fraction(exact_div(h * x0 - 1, mod), exact_div(k * x0 - 1, mod));
}

}  // namespace detail

/// Immediate successor of f in F_m: (h*x0 + 1)/k over x0, with
/// h*x0 == -1 (mod k) and m - k + 1 <= x0 <= m.
inline Fraction next_in_farey(const Fraction& f, Int m) {
  detail::require_order(m, 1);
  detail::require_in_farey(f, m);
  if (f == kOne) throw std::domain_error("1/1 has no successor");
  const Int x0 = solve_congruence_in_range(f.h(), f.k(), -1, m - f.k() + 1, m);
  return make_reduced_fraction(detail::exact_div(f.h() * x0 + 1, f.k()), x0);
}

/// Immediate predecessor of f in F_m: (h*x0 - 1)/k over x0, with
/// h*x0 == 1 (mod k) and m - k + 1 <= x0 <= m.
inline Fraction prev_in_farey(const Fraction& f, Int m) {
  detail::require_order(m, 1);
  detail::require_in_farey(f, m);
  if (f == kZero) throw std::domain_error("0/1 has no predecessor");
  const Int x0 = solve_congruence_in_range(f.h(), f.k(), 1, m - f.k() + 1, m);
  return make_reduced_fraction(detail::exact_div(f.h() * x0 - 1, f.k()), x0);
}

/// Predecessor of f in F(B(2m), m).
///
/// For f <= 1/2 the modular-inverse formula over the modulus k - h applies
/// directly. Right-half terms are conjugated through h/k -> (k-h)/k, which
/// reverses the sequence and so turns a predecessor query into a successor
/// query on the left half. m = 1 is answered from the three-term sequence.
inline Fraction pred_in_fb(const Fraction& f, Int m) {
  detail::require_order(2 * m, 2);
  detail::require_in_boolean(f, m);
  if (f == kZero) throw std::domain_error("0/1 has no predecessor");
  if (m == 1) return f == kOne ? kHalf : kZero;
  if (f <= kHalf) return detail::pred_left(f, m);
  return detail::complement(detail::succ_left(detail::complement(f), m));
}

/// Successor of f in F(B(2m), m); see pred_in_fb.
inline Fraction succ_in_fb(const Fraction& f, Int m) {
  detail::require_order(2 * m, 2);
  detail::require_in_boolean(f, m);
  if (f == kOne) throw std::domain_error("1/1 has no successor");
  if (m == 1) return f == kZero ? kHalf : kOne;
  if (f < kHalf) return detail::succ_left(f, m);
  return detail::complement(detail::pred_left(detail::complement(f), m));
}

}  // namespace farey
