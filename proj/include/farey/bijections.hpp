#pragma once

#include <farey/fraction.hpp>
#include <farey/sequences.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace farey {

enum class Direction { preserving, reversing };

inline std::string_view direction_name(Direction d) noexcept {
  return d == Direction::preserving ? "order-preserving" : "order-reversing";
}

// Matrices of the catalog maps, acting on [h k]^T.
namespace maps {
inline constexpr UnimodularMap kComplement{-1, 1, 0, 1};          // h/k -> (k-h)/k
inline constexpr UnimodularMap kLeftInvolution{-2, 1, -3, 2};     // h/k -> (k-2h)/(2k-3h)
inline constexpr UnimodularMap kRightInvolution{1, 0, 3, -1};     // h/k -> h/(3h-k)
inline constexpr UnimodularMap kLeftToRight{-1, 1, -3, 2};        // h/k -> (k-h)/(2k-3h)
inline constexpr UnimodularMap kRightToLeft{2, -1, 3, -1};        // h/k -> (2h-k)/(3h-k)
inline constexpr UnimodularMap kLeftToFarey{1, 0, -1, 1};         // h/k -> h/(k-h)
inline constexpr UnimodularMap kFareyToLeft{1, 0, 1, 1};          // h/k -> h/(k+h)
inline constexpr UnimodularMap kRightToFarey{-1, 1, 1, 0};        // h/k -> (k-h)/h
inline constexpr UnimodularMap kFareyToRight{0, 1, 1, 1};         // h/k -> k/(k+h)
}  // namespace maps

struct MapDescriptor {
  std::string name;
  UnimodularMap matrix;
  SeqDescriptor domain;
  SeqDescriptor codomain;
  Direction direction = Direction::preserving;
  // The matrix squares to +-identity (the map is its own inverse on sequences).
  bool involution = false;
  // Name and matrix of the catalog map that inverts this one, if any.
  std::optional<std::pair<std::string, UnimodularMap>> inverse;
};

/// Catalog entries applicable to (n, m). The complement map between
/// F(B(n),m) and F(B(n),n-m) is always present; the halfsequence maps need
/// n = 2m, and the maps to and from F_m additionally need m > 1.
inline std::vector<MapDescriptor> catalog(Int n, Int m) {
  if (m <= 0 || m >= n) throw std::invalid_argument("catalog parameters must satisfy 0 < m < n");
  std::vector<MapDescriptor> out;
  out.push_back({"lemma1", maps::kComplement, SeqDescriptor::boolean(n, m), SeqDescriptor::boolean(n, n - m),
                 Direction::reversing, true, std::nullopt});
  if (n != 2 * m) return out;

  const auto full = SeqDescriptor::boolean_symmetric(m);
  const auto left = SeqDescriptor::left_half(m);
  const auto right = SeqDescriptor::right_half(m);
  out.push_back({"lemma3-full", maps::kComplement, full, full, Direction::reversing, true, std::nullopt});
  out.push_back({"lemma3-left", maps::kLeftInvolution, left, left, Direction::reversing, true, std::nullopt});
  out.push_back({"lemma3-right", maps::kRightInvolution, right, right, Direction::reversing, true, std::nullopt});
  out.push_back({"cor4-lr", maps::kLeftToRight, left, right, Direction::preserving, false,
                 std::pair{std::string("cor4-rl"), maps::kRightToLeft}});
  out.push_back({"cor4-rl", maps::kRightToLeft, right, left, Direction::preserving, false,
                 std::pair{std::string("cor4-lr"), maps::kLeftToRight}});
  if (m < 2) return out;

  const auto standard = SeqDescriptor::standard(m);
  out.push_back({"thm5-left-to-farey", maps::kLeftToFarey, left, standard, Direction::preserving, false,
                 std::pair{std::string("thm5-farey-to-left"), maps::kFareyToLeft}});
  out.push_back({"thm5-farey-to-left", maps::kFareyToLeft, standard, left, Direction::preserving, false,
                 std::pair{std::string("thm5-left-to-farey"), maps::kLeftToFarey}});
  out.push_back({"thm5-right-to-farey", maps::kRightToFarey, right, standard, Direction::reversing, false,
                 std::pair{std::string("thm5-farey-to-right"), maps::kFareyToRight}});
  out.push_back({"thm5-farey-to-right", maps::kFareyToRight, standard, right, Direction::reversing, false,
                 std::pair{std::string("thm5-right-to-farey"), maps::kRightToFarey}});
  return out;
}

/// Looks up one catalog entry by its stable name.
inline MapDescriptor find_map(std::string_view name, Int n, Int m) {
  for (auto& d : catalog(n, m)) {
    if (d.name == name) return d;
  }
  throw std::invalid_argument("no map named '" + std::string(name) + "' applies to n=" + std::to_string(n) +
                              ", m=" + std::to_string(m));
}

struct Counterexample {
  Fraction input;
  std::optional<Fraction> image;
  std::string reason;
};

struct VerificationReport {
  std::string map_name;
  Int n = 0;
  Int m = 0;
  std::vector<std::pair<std::string, bool>> checks;
  std::optional<Counterexample> counterexample;

  bool passed() const noexcept {
    for (const auto& [name, ok] : checks) {
      if (!ok) return false;
    }
    return !checks.empty();
  }
};

namespace detail {

inline bool squares_to_identity(const UnimodularMap& m) { return equal_up_to_sign(m * m, kIdentityMap); }

inline bool mutually_inverse(const UnimodularMap& x, const UnimodularMap& y) {
  return equal_up_to_sign(x * y, kIdentityMap) && equal_up_to_sign(y * x, kIdentityMap);
}

}  // namespace detail

/// Checks a descriptor both against materialized sequences and at the matrix
/// level. Failures are recorded in the report; nothing is thrown for a
/// misbehaving map.
inline VerificationReport verify_map(const MapDescriptor& d, const FareySeq& domain, const FareySeq& codomain) {
  VerificationReport report{d.name, d.domain.n, d.domain.m, {}, std::nullopt};
  auto fail_with = [&](Counterexample c) {
    if (!report.counterexample) report.counterexample = std::move(c);
  };

  report.checks.emplace_back("unimodular", d.matrix.is_unimodular());

  std::vector<Fraction> images;
  images.reserve(domain.size());
  bool all_defined = true;
  for (const auto& f : domain) {
    try {
      images.push_back(apply_map(d.matrix, f));
    } catch (const std::exception& e) {
      all_defined = false;
      fail_with({f, std::nullopt, e.what()});
      break;
    }
  }

  bool members = all_defined;
  if (all_defined) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!codomain.contains(images[i])) {
        members = false;
        fail_with({domain[i], images[i], "image is not a term of " + to_string(d.codomain)});
        break;
      }
    }
  }
  // Injective into the codomain and of equal size means the image set is the codomain.
  std::vector<Fraction> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (members && !injective) fail_with({domain[0], std::nullopt, "map is not injective"});
  const bool onto = members && injective && images.size() == codomain.size();
  if (members && injective && !onto) fail_with({domain[0], std::nullopt, "image misses codomain terms"});
  report.checks.emplace_back("image-equals-codomain", onto);

  bool monotone = onto;
  if (onto) {
    const std::size_t len = images.size();
    for (std::size_t i = 0; i < len; ++i) {
      const auto& expected = d.direction == Direction::preserving ? codomain[i] : codomain[len - 1 - i];
      if (images[i] != expected) {
        monotone = false;
        fail_with({domain[i], images[i], std::string("not ") + std::string(direction_name(d.direction)) +
                                             ", expected " + to_string(expected)});
        break;
      }
    }
  }
  report.checks.emplace_back("direction", monotone);

  if (d.involution) {
    bool ok = detail::squares_to_identity(d.matrix);
    if (!ok) fail_with({domain[0], std::nullopt, "matrix does not square to +-identity"});
    if (ok && onto) {
      for (std::size_t i = 0; i < images.size() && ok; ++i) {
        if (apply_map(d.matrix, images[i]) != domain[i]) {
          ok = false;
          fail_with({domain[i], images[i], "map applied twice is not the identity"});
        }
      }
    }
    report.checks.emplace_back("involution", ok);
  }

  if (d.inverse) {
    const auto& [inverse_name, inverse_matrix] = *d.inverse;
    bool ok = detail::mutually_inverse(d.matrix, inverse_matrix);
    if (!ok) fail_with({domain[0], std::nullopt, "matrix is not inverted by " + inverse_name});
    if (ok && onto) {
      for (std::size_t i = 0; i < images.size() && ok; ++i) {
        if (apply_map(inverse_matrix, images[i]) != domain[i]) {
          ok = false;
          fail_with({domain[i], images[i], inverse_name + " does not map the image back"});
        }
      }
    }
    report.checks.emplace_back("inverse:" + inverse_name, ok);
  }

  return report;
}

inline VerificationReport verify_map(const MapDescriptor& d) {
  return verify_map(d, make_sequence(d.domain), make_sequence(d.codomain));
}

/// Matrix-level relations among catalog maps (compositions read right to
/// left). Each entry is (relation, holds).
inline std::vector<std::pair<std::string, bool>> composition_checks() {
  using namespace maps;
  return {
      {"thm5-farey-to-right*thm5-left-to-farey=lemma3-full",
       equal_up_to_sign(kFareyToRight * kLeftToFarey, kComplement)},
      {"thm5-farey-to-left*thm5-right-to-farey=lemma3-full",
       equal_up_to_sign(kFareyToLeft * kRightToFarey, kComplement)},
      {"lemma3-full*lemma3-left=cor4-lr", equal_up_to_sign(kComplement * kLeftInvolution, kLeftToRight)},
      {"lemma3-right*lemma3-full=cor4-lr", equal_up_to_sign(kRightInvolution * kComplement, kLeftToRight)},
      {"lemma3-left*lemma3-full=cor4-rl", equal_up_to_sign(kLeftInvolution * kComplement, kRightToLeft)},
      {"cor4-rl=inverse(cor4-lr)", equal_up_to_sign(inverse(kLeftToRight), kRightToLeft)},
  };
}

struct QuarterIndices {
  std::size_t t13 = 0;  // index of 1/3
  std::size_t t12 = 0;  // index of 1/2
  std::size_t t23 = 0;  // index of 2/3
  std::size_t t11 = 0;  // index of 1/1
};

/// Indices of 1/3, 1/2, 2/3, 1/1 in F(B(2m), m), which stand in ratio 1:2:3:4.
inline QuarterIndices quarter_indices(const FareySeq& symmetric) {
  if (!symmetric.descriptor().is_symmetric_boolean() || symmetric.descriptor().m < 2) {
    throw std::invalid_argument("quarter indices need F(B(2m),m) with m > 1");
  }
  auto at = [&](Int h, Int k) {
    const auto i = index_of(symmetric, make_fraction(h, k));
    if (!i) throw std::logic_error(std::to_string(h) + "/" + std::to_string(k) + " missing from F(B(2m),m)");
    return *i;
  };
  const QuarterIndices q{at(1, 3), at(1, 2), at(2, 3), at(1, 1)};
  if (q.t12 != 2 * q.t13 || q.t23 != 3 * q.t13 || q.t11 != 4 * q.t13) {
    throw std::logic_error("quarter indices of F(B(2m),m) are not in ratio 1:2:3:4");
  }
  return q;
}

inline QuarterIndices quarter_indices(Int m) {
  if (m < 2) throw std::invalid_argument("quarter indices need m > 1");
  return quarter_indices(farey_boolean_symmetric(m));
}

}  // namespace farey
