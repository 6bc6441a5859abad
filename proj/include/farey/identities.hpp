#pragma once

#include <farey/fraction.hpp>
#include <farey/sequences.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace farey {

using BigValue = boost::multiprecision::cpp_int;

// One evaluated instance of an identity. Several lhs entries mean the identity
// equates several sums with the same closed form. side_checks hold auxiliary
// (name, actual, expected) equalities that must also hold.
struct IdentityReport {
  struct SideCheck {
    std::string name;
    BigValue actual;
    BigValue expected;
  };

  std::string name;
  std::vector<std::pair<std::string, Int>> params;
  std::vector<BigValue> lhs;
  BigValue rhs;
  std::vector<SideCheck> side_checks;

  bool pass() const {
    if (lhs.empty()) return false;
    for (const auto& v : lhs) {
      if (v != rhs) return false;
    }
    for (const auto& c : side_checks) {
      if (c.actual != c.expected) return false;
    }
    return true;
  }
};

/// Möbius function by trial division.
constexpr int mobius(Int d) {
  if (d < 1) throw std::invalid_argument("mobius is defined for positive integers");
  int sign = 1;
  for (Int p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  return d > 1 ? -sign : sign;
}

/// Number of j in [i, l] coprime to h, by direct gcd counting. An empty
/// interval (l < i) yields 0.
constexpr Int phi_interval(Int h, Int i, Int l) {
  if (h < 1) throw std::invalid_argument("phi_interval needs h >= 1");
  Int count = 0;
  for (Int j = i; j <= l; ++j) {
    if (std::gcd(h, j) == 1) ++count;
  }
  return count;
}

/// Count of integers in [lo_exclusive + 1, hi] coprime to h via
/// sum over d | h, d <= min(hi, h) of mu(d) * (floor(hi/d) - floor(lo_exclusive/d)).
constexpr Int phi_interval_mobius(Int h, Int lo_exclusive, Int hi) {
  if (h < 1) throw std::invalid_argument("phi_interval_mobius needs h >= 1");
  if (lo_exclusive < 0) throw std::invalid_argument("interval must consist of positive integers");
  if (lo_exclusive >= hi) throw std::invalid_argument("interval is empty");
  Int total = 0;
  const Int top = std::min(hi, h);
  for (Int d = 1; d <= top; ++d) {
    if (h % d == 0) total += mobius(d) * (hi / d - lo_exclusive / d);
  }
  return total;
}

/// Binomial coefficient C(n, r); zero outside 0 <= r <= n.
inline BigValue binomial(Int n, Int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigValue out = 1;
  for (Int i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

inline BigValue pow2(Int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  BigValue one = 1;
  return one << static_cast<unsigned>(e);
}

namespace detail {

// sum_{d=1..m} mu(d) * floor(m/d) * (floor(m/d) + 1)
inline BigValue mobius_pair_sum(Int m) {
  BigValue total = 0;
  for (Int d = 1; d <= m; ++d) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const BigValue q = m / d;
    total += mu * q * (q + 1);
  }
  return total;
}

inline void require_m_above_one(Int m) {
  if (m < 2) throw std::invalid_argument("identity requires m > 1");
  if (m > kMaxOrder / 2) throw std::invalid_argument("m exceeds supported bound");
}

inline void require_range(Int n, Int m) {
  if (m <= 0 || m >= n) throw std::invalid_argument("parameters must satisfy 0 < m < n");
}

// The double sum over interior terms of F(B(n), m):
// sum_f sum_{1<=s<=floor(min(m/h, (n-m)/(k-h)))} C(m, s*h) * C(n-m, s*(k-h)).
inline BigValue rank_slice_sum(const FareySeq& seq, Int n, Int m) {
  BigValue total = 0;
  for (const auto& f : seq) {
    if (f == kZero || f == kOne) continue;
    const Int h = f.h(), g = f.k() - f.h();
    const Int s_max = std::min(m / h, (n - m) / g);
    for (Int s = 1; s <= s_max; ++s) total += binomial(m, s * h) * binomial(n - m, s * g);
  }
  return total;
}

// sum_{1<=t<=floor(m/2)} C(m, 2t) * C(m, t)
inline BigValue paired_binomial_sum(Int m) {
  BigValue total = 0;
  for (Int t = 1; t <= m / 2; ++t) total += binomial(m, 2 * t) * binomial(m, t);
  return total;
}

// 2^{2m-1} - 2^m - C(2m,m)/2 + 1
inline BigValue half_closed_form(Int m) { return pow2(2 * m - 1) - pow2(m) - binomial(2 * m, m) / 2 + 1; }

template <typename InRange, typename Summand>
BigValue band_sum(const FareySeq& seq, InRange in_band, Summand summand) {
  BigValue total = 0;
  for (const auto& f : seq) {
    if (in_band(f)) total += summand(f.h(), f.k());
  }
  return total;
}

}  // namespace detail

/// |F_m| = 1 + (1/2) sum_{d>=1} mu(d) floor(m/d) (floor(m/d) + 1).
inline BigValue farey_size(Int m) {
  if (m < 1) throw std::invalid_argument("farey_size needs m >= 1");
  return 1 + detail::mobius_pair_sum(m) / 2;
}

/// |F(B(2m), m)| = 1 + sum_{d>=1} mu(d) floor(m/d) (floor(m/d) + 1). Also
/// evaluated at m = 1, where it gives the directly counted 3.
inline BigValue farey_boolean_size(Int m) {
  if (m < 1) throw std::invalid_argument("farey_boolean_size needs m >= 1");
  return 1 + detail::mobius_pair_sum(m);
}

/// Rank-slice double sums over F(B(n), m) and F(B(n), n-m), both equal to
/// 2^n - 2^m - 2^{n-m} + 1.
inline IdentityReport prop2_identity(Int n, Int m) {
  detail::require_range(n, m);
  IdentityReport r{"prop2", {{"n", n}, {"m", m}}, {}, pow2(n) - pow2(m) - pow2(n - m) + 1, {}};
  r.lhs.push_back(detail::rank_slice_sum(farey_boolean(n, m), n, m));
  r.lhs.push_back(detail::rank_slice_sum(farey_boolean(n, n - m), n, n - m));
  return r;
}

/// Cardinality of the filter generated by the atoms below a rank-m element,
/// 2^n - 2^{n-m}, against its partition into the ideal (2^m - 1 elements) and
/// the rank slices indexed by interior terms of F(B(n), m).
inline IdentityReport partition_identity(Int n, Int m) {
  detail::require_range(n, m);
  const auto seq = farey_boolean(n, m);
  IdentityReport r{"partition", {{"n", n}, {"m", m}}, {}, pow2(m) - 1 + detail::rank_slice_sum(seq, n, m), {}};
  r.lhs.push_back(pow2(n) - pow2(n - m));
  return r;
}

/// The three identity families over F(B(2m), m), reported as prop7-i,
/// prop7-ii (two sums split at 1/2) and prop7-iii (four sums split at 1/3,
/// 1/2, 2/3).
inline std::vector<IdentityReport> prop7_identities(Int m) {
  detail::require_m_above_one(m);
  const auto seq = farey_boolean_symmetric(m);
  const Fraction third = make_fraction(1, 3), two_thirds = make_fraction(2, 3);
  auto C = [m](Int r) { return binomial(m, r); };
  std::vector<IdentityReport> out;

  {
    auto summand = [&](Int h, Int k) {
      BigValue t = 0;
      for (Int s = 1; s <= std::min(m / h, m / (k - h)); ++s) t += C(s * h) * C(s * (k - h));
      return t;
    };
    IdentityReport r{"prop7-i", {{"m", m}}, {}, pow2(2 * m) - pow2(m + 1) + 1, {}};
    r.lhs.push_back(
        detail::band_sum(seq, [](const Fraction& f) { return kZero < f && f < kOne; }, summand));
    out.push_back(std::move(r));
  }

  {
    auto left = [&](Int h, Int k) {
      BigValue t = 0;
      for (Int s = 1; s <= m / (k - h); ++s) t += C(s * h) * C(s * (k - h));
      return t;
    };
    auto right = [&](Int h, Int k) {
      BigValue t = 0;
      for (Int s = 1; s <= m / h; ++s) t += C(s * h) * C(s * (k - h));
      return t;
    };
    IdentityReport r{"prop7-ii", {{"m", m}}, {}, detail::half_closed_form(m), {}};
    r.lhs.push_back(detail::band_sum(seq, [](const Fraction& f) { return kZero < f && f < kHalf; }, left));
    r.lhs.push_back(detail::band_sum(seq, [](const Fraction& f) { return kHalf < f && f < kOne; }, right));
    out.push_back(std::move(r));
  }

  {
    // Binomials with negative lower index vanish, so k - 2h < 0 and 2h - k < 0
    // contribute nothing.
    auto left = [&](Int h, Int k) {
      BigValue t = 0;
      for (Int s = 1; s <= m / (k - h); ++s) t += C(s * (k - h)) * (C(s * h) + C(s * (k - 2 * h)));
      return t;
    };
    auto right = [&](Int h, Int k) {
      BigValue t = 0;
      for (Int s = 1; s <= m / h; ++s) t += C(s * h) * (C(s * (k - h)) + C(s * (2 * h - k)));
      return t;
    };
    IdentityReport r{"prop7-iii", {{"m", m}}, {}, detail::half_closed_form(m) - detail::paired_binomial_sum(m), {}};
    r.lhs.push_back(detail::band_sum(seq, [&](const Fraction& f) { return kZero < f && f < third; }, left));
    r.lhs.push_back(detail::band_sum(seq, [&](const Fraction& f) { return third < f && f < kHalf; }, left));
    r.lhs.push_back(detail::band_sum(seq, [&](const Fraction& f) { return kHalf < f && f < two_thirds; }, right));
    r.lhs.push_back(detail::band_sum(seq, [&](const Fraction& f) { return two_thirds < f && f < kOne; }, right));
    out.push_back(std::move(r));
  }
  return out;
}

/// The two identity families over the standard sequence F_m, reported as
/// cor8-i and cor8-ii (two sums split at 1/2).
inline std::vector<IdentityReport> cor8_identities(Int m) {
  detail::require_m_above_one(m);
  const auto seq = farey(m);
  auto C = [m](Int r) { return binomial(m, r); };
  std::vector<IdentityReport> out;

  auto plain = [&](Int h, Int k) {
    BigValue t = 0;
    for (Int s = 1; s <= m / k; ++s) t += C(s * h) * C(s * k);
    return t;
  };
  IdentityReport first{"cor8-i", {{"m", m}}, {}, detail::half_closed_form(m), {}};
  first.lhs.push_back(detail::band_sum(seq, [](const Fraction& f) { return kZero < f && f < kOne; }, plain));
  out.push_back(std::move(first));

  auto paired = [&](Int h, Int k) {
    BigValue t = 0;
    for (Int s = 1; s <= m / k; ++s) t += C(s * k) * (C(s * h) + C(s * (k - h)));
    return t;
  };
  IdentityReport second{"cor8-ii", {{"m", m}}, {}, detail::half_closed_form(m) - detail::paired_binomial_sum(m), {}};
  second.lhs.push_back(detail::band_sum(seq, [](const Fraction& f) { return kZero < f && f < kHalf; }, paired));
  second.lhs.push_back(detail::band_sum(seq, [](const Fraction& f) { return kHalf < f && f < kOne; }, paired));
  out.push_back(std::move(second));
  return out;
}

/// True when every lhs sum equals the first one, regardless of the closed form.
inline bool lhs_mutually_equal(const IdentityReport& r) {
  for (const auto& v : r.lhs) {
    if (v != r.lhs.front()) return false;
  }
  return true;
}

}  // namespace farey
