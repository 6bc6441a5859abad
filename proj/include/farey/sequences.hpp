#pragma once

#include <farey/fraction.hpp>
#include <farey/neighbors.hpp>

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace farey {

enum class Family { standard, upper, boolean, boolean_symmetric, left_half, right_half };

inline std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::standard: return "farey";
    case Family::upper: return "upper";
    case Family::boolean: return "boolean";
    case Family::boolean_symmetric: return "boolean-symmetric";
    case Family::left_half: return "left-half";
    case Family::right_half: return "right-half";
  }
  return "?";
}

// Which sequence a FareySeq holds. For the n = 2m families n is stored as 2m;
// m is 0 for the standard family.
struct SeqDescriptor {
  Family family = Family::standard;
  Int n = 1;
  Int m = 0;

  static SeqDescriptor standard(Int n) {
    if (n < 1) throw std::invalid_argument("Farey order must be positive");
    if (n > kMaxOrder) throw std::invalid_argument("Farey order exceeds supported bound");
    return {Family::standard, n, 0};
  }
  static SeqDescriptor upper(Int n, Int m) { return ranged(Family::upper, n, m); }
  static SeqDescriptor boolean(Int n, Int m) { return ranged(Family::boolean, n, m); }
  static SeqDescriptor boolean_symmetric(Int m) { return ranged(Family::boolean_symmetric, 2 * m, m); }
  static SeqDescriptor left_half(Int m) { return ranged(Family::left_half, 2 * m, m); }
  static SeqDescriptor right_half(Int m) { return ranged(Family::right_half, 2 * m, m); }

  // boolean(2m, m) and boolean-symmetric(m) name the same sequence.
  bool is_symmetric_boolean() const noexcept {
    return family == Family::boolean_symmetric || (family == Family::boolean && n == 2 * m);
  }

  friend bool operator==(const SeqDescriptor&, const SeqDescriptor&) = default;

 private:
  static SeqDescriptor ranged(Family family, Int n, Int m) {
    if (m <= 0 || m >= n) throw std::invalid_argument("parameters must satisfy 0 < m < n");
    if (n > kMaxOrder) throw std::invalid_argument("order exceeds supported bound");
    return {family, n, m};
  }
};

inline std::string to_string(const SeqDescriptor& d) {
  std::string out(family_name(d.family));
  out += "(n=" + std::to_string(d.n);
  if (d.family != Family::standard) out += ",m=" + std::to_string(d.m);
  return out + ")";
}

// Ascending, duplicate-free, zero-indexed terms of one sequence family.
class FareySeq {
 public:
  FareySeq(SeqDescriptor descriptor, std::vector<Fraction> terms)
      : descriptor_(descriptor), terms_(std::move(terms)) {}

  const SeqDescriptor& descriptor() const noexcept { return descriptor_; }
  std::span<const Fraction> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const Fraction& operator[](std::size_t i) const { return terms_[i]; }
  const Fraction& front() const { return terms_.front(); }
  const Fraction& back() const { return terms_.back(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  bool contains(const Fraction& f) const { return std::binary_search(terms_.begin(), terms_.end(), f); }

 private:
  SeqDescriptor descriptor_;
  std::vector<Fraction> terms_;
};

/// Zero-based position of f in s, or nullopt.
inline std::optional<std::size_t> index_of(const FareySeq& s, const Fraction& f) {
  const auto it = std::lower_bound(s.begin(), s.end(), f);
  if (it == s.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - s.begin());
}

namespace detail {

template <typename Pred>
FareySeq filtered(const FareySeq& source, SeqDescriptor descriptor, Pred keep) {
  std::vector<Fraction> out;
  out.reserve(source.size());
  std::copy_if(source.begin(), source.end(), std::back_inserter(out), keep);
  return FareySeq(descriptor, std::move(out));
}

}  // namespace detail

/// F_n, built by successor stepping from 0/1.
inline FareySeq farey(Int n) {
  const auto descriptor = SeqDescriptor::standard(n);
  std::vector<Fraction> terms;
  // |F_n| ~ 3n^2/pi^2
  terms.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * 31 / 100 + 2);
  Fraction f = kZero;
  terms.push_back(f);
  while (f != kOne) {
    f = next_in_farey(f, n);
    terms.push_back(f);
  }
  return FareySeq(descriptor, std::move(terms));
}

/// Terms of F_n with numerator at most m.
inline FareySeq upper_subsequence(Int n, Int m) {
  const auto descriptor = SeqDescriptor::upper(n, m);
  return detail::filtered(farey(n), descriptor, [m](const Fraction& f) { return f.h() <= m; });
}

/// F(B(n), m): terms of F_n with h <= m and k - h <= n - m.
inline FareySeq farey_boolean(Int n, Int m) {
  const auto descriptor = SeqDescriptor::boolean(n, m);
  return detail::filtered(farey(n), descriptor,
                          [n, m](const Fraction& f) { return f.h() <= m && f.k() - f.h() <= n - m; });
}

/// F(B(2m), m) tagged with the symmetric descriptor.
inline FareySeq farey_boolean_symmetric(Int m) {
  const auto descriptor = SeqDescriptor::boolean_symmetric(m);
  auto full = farey_boolean(2 * m, m);
  return FareySeq(descriptor, {full.begin(), full.end()});
}

inline FareySeq left_half(const FareySeq& s) {
  if (!s.descriptor().is_symmetric_boolean()) {
    throw std::invalid_argument("halfsequences are defined for F(B(2m),m) only, got " + to_string(s.descriptor()));
  }
  return detail::filtered(s, SeqDescriptor::left_half(s.descriptor().m),
                          [](const Fraction& f) { return f <= kHalf; });
}

inline FareySeq right_half(const FareySeq& s) {
  if (!s.descriptor().is_symmetric_boolean()) {
    throw std::invalid_argument("halfsequences are defined for F(B(2m),m) only, got " + to_string(s.descriptor()));
  }
  return detail::filtered(s, SeqDescriptor::right_half(s.descriptor().m),
                          [](const Fraction& f) { return f >= kHalf; });
}

/// Materializes the sequence a descriptor names.
inline FareySeq make_sequence(const SeqDescriptor& d) {
  switch (d.family) {
    case Family::standard: return farey(d.n);
    case Family::upper: return upper_subsequence(d.n, d.m);
    case Family::boolean: return farey_boolean(d.n, d.m);
    case Family::boolean_symmetric: return farey_boolean_symmetric(d.m);
    case Family::left_half: return left_half(farey_boolean_symmetric(d.m));
    case Family::right_half: return right_half(farey_boolean_symmetric(d.m));
  }
  throw std::invalid_argument("unknown sequence family");
}

}  // namespace farey
