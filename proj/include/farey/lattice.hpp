#pragma once

#include <farey/fraction.hpp>
#include <farey/identities.hpp>
#include <farey/sequences.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Brute-force ground truth over the Boolean lattice of subsets of an n-set
// C = {0, ..., n-1} with marked subset A = {0, ..., m-1}. Subsets are n-bit
// words; rank is popcount and |B n A| is the popcount of B & A.

namespace farey::lattice {

inline constexpr Int kMaxGroundSet = 24;
inline constexpr Int kMaxFilterGroundSet = 20;

struct SubsetWord {
  std::uint32_t bits = 0;

  constexpr Int rank() const noexcept { return std::popcount(bits); }
  constexpr Int meet_rank(std::uint32_t marked) const noexcept { return std::popcount(bits & marked); }
};

constexpr std::uint32_t marked_mask(Int m) noexcept { return (std::uint32_t{1} << m) - 1; }

namespace detail {

inline void require_ground_set(Int n, Int bound) {
  if (n < 1) throw std::invalid_argument("ground set must be nonempty");
  if (n > bound) throw std::invalid_argument("ground set size exceeds enumeration bound " + std::to_string(bound));
}

}  // namespace detail

/// Sorted distinct reduced ratios |B n A| / |B| over nonempty B.
inline FareySeq enumerate_fractions(Int n, Int m) {
  detail::require_ground_set(n, kMaxGroundSet);
  const auto descriptor = SeqDescriptor::boolean(n, m);
  const std::uint32_t a = marked_mask(m);
  const std::uint32_t end = std::uint32_t{1} << n;
  // (j, l) pairs are few; collect them before reducing.
  std::vector<bool> seen(static_cast<std::size_t>((n + 1) * (n + 1)), false);
  for (std::uint32_t b = 1; b < end; ++b) {
    const SubsetWord w{b};
    seen[static_cast<std::size_t>(w.meet_rank(a) * (n + 1) + w.rank())] = true;
  }
  std::vector<Fraction> terms;
  for (Int j = 0; j <= n; ++j) {
    for (Int l = 1; l <= n; ++l) {
      if (seen[static_cast<std::size_t>(j * (n + 1) + l)]) terms.push_back(make_fraction(j, l));
    }
  }
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return FareySeq(descriptor, std::move(terms));
}

/// Number of B with |B| = l and |B n A| = j, by enumeration.
inline Int count_exact_intersection(Int n, Int m, Int j, Int l) {
  detail::require_ground_set(n, kMaxGroundSet);
  if (m < 0 || m > n) throw std::invalid_argument("marked set size must lie in [0, n]");
  if (j < 0 || j > l || l > n) throw std::invalid_argument("need 0 <= j <= l <= n");
  const std::uint32_t a = marked_mask(m);
  const std::uint32_t end = std::uint32_t{1} << n;
  Int count = 0;
  for (std::uint32_t b = 0; b < end; ++b) {
    const SubsetWord w{b};
    if (w.rank() == l && w.meet_rank(a) == j) ++count;
  }
  return count;
}

/// Enumerated size of the filter generated by the atoms of A (subsets meeting
/// A) against 2^n - 2^{n-m}, with the ideal below A minus the empty set
/// checked against 2^m - 1.
inline IdentityReport filter_cardinality_check(Int n, Int m) {
  detail::require_ground_set(n, kMaxFilterGroundSet);
  if (m <= 0 || m >= n) throw std::invalid_argument("parameters must satisfy 0 < m < n");
  const std::uint32_t a = marked_mask(m);
  const std::uint32_t end = std::uint32_t{1} << n;
  Int filter = 0, ideal = 0;
  for (std::uint32_t b = 1; b < end; ++b) {
    if ((b & a) != 0) ++filter;
    if ((b & ~a) == 0) ++ideal;
  }
  IdentityReport r{"filter-cardinality", {{"n", n}, {"m", m}}, {BigValue(filter)}, pow2(n) - pow2(n - m), {}};
  r.side_checks.push_back({"ideal-cardinality", BigValue(ideal), pow2(m) - 1});
  return r;
}

}  // namespace farey::lattice
