#pragma once

#include <farey/bijections.hpp>
#include <farey/fraction.hpp>
#include <farey/identities.hpp>
#include <farey/io.hpp>
#include <farey/lattice.hpp>
#include <farey/neighbors.hpp>
#include <farey/sequences.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace farey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Thrown for well-formed options whose combination makes no sense.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Collects one line per check and the PASS/FAIL summary.
class SweepLog {
 public:
  SweepLog(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void record(const std::string& label, bool ok, const std::string& detail = {}) {
    ++total_;
    if (ok) ++passed_;
    out_ << (ok ? "PASS " : "FAIL ") << label << '\n';
    if (!ok && !detail.empty()) err_ << label << ": " << detail << '\n';
  }

  void record(const IdentityReport& r) {
    std::string label = r.name;
    for (const auto& [key, value] : r.params) label += " " + key + "=" + std::to_string(value);
    std::string detail;
    if (!r.pass()) detail = to_json(r).dump();
    record(label, r.pass(), detail);
  }

  void record(const VerificationReport& r) {
    std::string label = "map " + r.map_name + " n=" + std::to_string(r.n) + " m=" + std::to_string(r.m);
    std::string detail;
    if (!r.passed()) detail = to_json(r).dump();
    record(label, r.passed(), detail);
  }

  bool all_passed() const noexcept { return passed_ == total_; }

  void summary() {
    out_ << (all_passed() ? "PASS " : "FAIL ") << passed_ << '/' << total_ << '\n';
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  int passed_ = 0;
  int total_ = 0;
};

inline void sweep_bijections(SweepLog& log, Int max_n, Int max_m) {
  for (Int n = 2; n <= max_n; ++n) {
    for (Int m = 1; m < n; ++m) log.record(verify_map(catalog(n, m).front()));
  }
  for (Int m = 1; m <= max_m; ++m) {
    for (const auto& d : catalog(2 * m, m)) {
      if (d.name != "lemma1") log.record(verify_map(d));
    }
  }
  for (Int m = 2; m <= max_m; ++m) {
    const auto seq = farey_boolean_symmetric(m);
    bool ok = true;
    std::string detail;
    try {
      (void)quarter_indices(seq);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    log.record("quarter-indices m=" + std::to_string(m), ok, detail);
    log.record("size-minus-one-divisible-by-4 m=" + std::to_string(m), (seq.size() - 1) % 4 == 0,
               "size " + std::to_string(seq.size()));
  }
  for (const auto& [relation, ok] : composition_checks()) log.record("matrix " + relation, ok);
}

inline void sweep_identities(SweepLog& log, Int max_n, Int max_m) {
  for (Int n = 2; n <= max_n; ++n) {
    for (Int m = 1; m < n; ++m) log.record(prop2_identity(n, m));
  }
  for (Int m = 2; m <= max_m; ++m) {
    for (const auto& r : prop7_identities(m)) log.record(r);
    for (const auto& r : cor8_identities(m)) log.record(r);
  }
  for (Int m = 1; m <= max_m; ++m) {
    const auto standard = farey_size(m);
    const auto generated = farey(m).size();
    log.record("farey-size m=" + std::to_string(m), standard == generated,
               "closed form " + standard.str() + ", generated " + std::to_string(generated));
    const auto boolean = farey_boolean_size(m);
    const auto generated_boolean = farey_boolean_symmetric(m).size();
    log.record("farey-boolean-size m=" + std::to_string(m), boolean == generated_boolean,
               "closed form " + boolean.str() + ", generated " + std::to_string(generated_boolean));
  }
}

inline void sweep_partition(SweepLog& log, Int max_n) {
  for (Int n = 2; n <= max_n; ++n) {
    for (Int m = 1; m < n; ++m) log.record(partition_identity(n, m));
  }
}

inline void sweep_oracle(SweepLog& log, Int max_n) {
  for (Int n = 2; n <= std::min(max_n, lattice::kMaxGroundSet); ++n) {
    for (Int m = 1; m < n; ++m) {
      const auto enumerated = lattice::enumerate_fractions(n, m);
      const auto generated = farey_boolean(n, m);
      const bool ok = std::equal(enumerated.begin(), enumerated.end(), generated.begin(), generated.end());
      log.record("oracle enumerate n=" + std::to_string(n) + " m=" + std::to_string(m), ok,
                 "enumerated " + std::to_string(enumerated.size()) + " terms, generated " +
                     std::to_string(generated.size()));
    }
  }
  for (Int n = 1; n <= std::min(max_n, lattice::kMaxGroundSet); ++n) {
    bool ok = true;
    std::string detail;
    for (Int m = 0; m <= n && ok; ++m) {
      for (Int l = 0; l <= n && ok; ++l) {
        for (Int j = 0; j <= l && ok; ++j) {
          const Int counted = lattice::count_exact_intersection(n, m, j, l);
          const BigValue expected = binomial(m, j) * binomial(n - m, l - j);
          if (counted != expected) {
            ok = false;
            detail = "m=" + std::to_string(m) + " j=" + std::to_string(j) + " l=" + std::to_string(l) +
                     ": counted " + std::to_string(counted) + ", expected " + expected.str();
          }
        }
      }
    }
    log.record("oracle count-exact-intersection n=" + std::to_string(n), ok, detail);
  }
  for (Int n = 2; n <= std::min(max_n, lattice::kMaxFilterGroundSet); ++n) {
    for (Int m = 1; m < n; ++m) log.record(lattice::filter_cardinality_check(n, m));
  }
}

namespace detail {

inline FareySeq generate(const std::string& family, Int n, std::optional<Int> m, const std::string& half) {
  if (family == "farey") {
    if (m) throw UsageError("--m is not used by --family farey");
    if (!half.empty()) throw UsageError("--half needs --family boolean");
    return farey(n);
  }
  if (!m) throw UsageError("--family " + family + " needs --m");
  if (family == "upper") {
    if (!half.empty()) throw UsageError("--half needs --family boolean");
    return upper_subsequence(n, *m);
  }
  auto seq = farey_boolean(n, *m);
  if (half.empty()) return seq;
  if (n != 2 * *m) throw UsageError("--half needs n = 2m");
  return half == "left" ? left_half(seq) : right_half(seq);
}

}  // namespace detail

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a verification or lookup fails, 2 on usage errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Farey sequences and Boolean-lattice Farey subsequences", "farey"};
  app.require_subcommand(1, 1);

  std::string family, half, format = "plain", name, frac_text, dir, suite;
  Int n = 0, m = 0, max_n = 14, max_m = 12;

  auto* gen = app.add_subcommand("gen", "Print a sequence");
  gen->add_option("--family", family)->required()->check(CLI::IsMember({"farey", "upper", "boolean"}));
  gen->add_option("--n", n)->required()->check(CLI::Range(Int{1}, kMaxOrder));
  auto* gen_m = gen->add_option("--m", m)->check(CLI::PositiveNumber);
  gen->add_option("--half", half)->check(CLI::IsMember({"left", "right"}));
  gen->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  auto* map = app.add_subcommand("map", "Apply a catalog map to a fraction");
  map->add_option("--name", name)->required();
  auto* map_n = map->add_option("--n", n, "defaults to 2m")->check(CLI::PositiveNumber);
  map->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  map->add_option("--frac", frac_text)->required();

  auto* neighbor = app.add_subcommand("neighbor", "Predecessor or successor of a fraction");
  neighbor->add_option("--family", family)->required()->check(CLI::IsMember({"farey", "boolean"}));
  neighbor->add_option("--m", m)->required()->check(CLI::Range(Int{1}, kMaxOrder));
  neighbor->add_option("--frac", frac_text)->required();
  neighbor->add_option("--dir", dir)->required()->check(CLI::IsMember({"next", "prev"}));

  auto* index = app.add_subcommand("index", "Zero-based index of a fraction");
  index->add_option("--family", family)->default_val("boolean")->check(CLI::IsMember({"farey", "boolean"}));
  index->add_option("--m", m)->required()->check(CLI::Range(Int{1}, kMaxOrder / 2));
  index->add_option("--frac", frac_text)->required();

  auto* count = app.add_subcommand("count", "Closed-form cardinality");
  count->add_option("--family", family)->required()->check(CLI::IsMember({"farey", "boolean"}));
  count->add_option("--m", m)->required()->check(CLI::Range(Int{1}, kMaxOrder));

  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"bijections", "identities", "partition", "oracle", "all"}));
  verify->add_option("--max-n", max_n)->check(CLI::Range(Int{2}, Int{200}));
  verify->add_option("--max-m", max_m)->check(CLI::Range(Int{2}, Int{100}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const auto seq = detail::generate(family, n, *gen_m ? std::optional<Int>(m) : std::nullopt, half);
      if (format == "json") {
        out << emit_json(seq) << '\n';
      } else {
        write_plain(out, seq);
      }
      return kExitOk;
    }
    if (map->parsed()) {
      const Int order = *map_n ? n : 2 * m;
      const auto d = find_map(name, order, m);
      const auto f = parse_fraction(frac_text);
      if (!make_sequence(d.domain).contains(f)) {
        throw UsageError(to_string(f) + " is not a term of " + to_string(d.domain));
      }
      out << apply_map(d.matrix, f) << '\n';
      return kExitOk;
    }
    if (neighbor->parsed()) {
      const auto f = parse_fraction(frac_text);
      const bool next = dir == "next";
      Fraction result;
      if (family == "farey") {
        result = next ? next_in_farey(f, m) : prev_in_farey(f, m);
      } else {
        result = next ? succ_in_fb(f, m) : pred_in_fb(f, m);
      }
      out << result << '\n';
      return kExitOk;
    }
    if (index->parsed()) {
      const auto f = parse_fraction(frac_text);
      const auto seq = family == "farey" ? farey(m) : farey_boolean_symmetric(m);
      if (const auto i = index_of(seq, f)) {
        out << *i << '\n';
        return kExitOk;
      }
      out << "absent\n";
      return kExitFailure;
    }
    if (count->parsed()) {
      out << (family == "farey" ? farey_size(m) : farey_boolean_size(m)).str() << '\n';
      return kExitOk;
    }
    if (verify->parsed()) {
      SweepLog log(out, err);
      const bool all = suite == "all";
      if (all || suite == "bijections") sweep_bijections(log, max_n, max_m);
      if (all || suite == "identities") sweep_identities(log, max_n, max_m);
      if (all || suite == "partition") sweep_partition(log, max_n);
      if (all || suite == "oracle") sweep_oracle(log, max_n);
      log.summary();
      return log.all_passed() ? kExitOk : kExitFailure;
    }
  } catch (const std::logic_error& e) {
    // invalid_argument and domain_error derive from logic_error; both are
    // caller mistakes here. A plain logic_error is an internal invariant.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace farey::cli
