#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cspec/bignat.hpp"
#include "cspec/classes.hpp"
#include "cspec/divgraph.hpp"
#include "cspec/partition.hpp"
#include "cspec/primes.hpp"

namespace cspec {

struct VerifyConfig {
  // Largest residual support n - t* the case check will enumerate.
  unsigned support_cap = 60;
};

// ---------------------------------------------------------------------------
// |Omega| > log2(n!/p!), decided as 2^|Omega| > n!/p! in exact arithmetic.

struct OmegaCheck {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t omega_count = 0;
  BigNat ratio;                 // n!/p!
  std::size_t ratio_bits = 0;   // bit length of n!/p!
  std::size_t power_bits = 0;   // bit length of 2^|Omega|
  bool holds = false;
};

OmegaCheck check_omega_lemma(const PrimeTable& table, std::uint64_t n);

// ---------------------------------------------------------------------------
// Sums of chain heights over the fixed-point-free families R_1..R_m.

// Published upper bounds on h(Psi_t) indexed by m = n - t.
const std::map<unsigned, unsigned>& published_hz_bounds();

using KindConvention = std::pair<GroupKind, Convention>;

struct HzTableRow {
  unsigned m = 0;
  std::optional<unsigned> published_bound;
  std::map<KindConvention, std::size_t> computed;

  // (kind, convention) pairs whose computed sum is above published_bound.
  std::vector<KindConvention> exceeding() const;
  // True if there is no published bound or some pair is within it.
  bool reproduced() const;
};

// Memoised h(R_i) for both kinds and conventions, i in [0, max_i].
class MovedHeights {
 public:
  explicit MovedHeights(unsigned max_i);

  unsigned max_i() const { return max_i_; }
  std::size_t height(GroupKind kind, unsigned i, Convention convention) const;
  // sum over i = 1..m of h(R_i)
  std::size_t sum(GroupKind kind, unsigned m, Convention convention) const;

 private:
  unsigned max_i_;
  // [kind][i] -> number of chain vertices
  std::vector<std::size_t> sym_;
  std::vector<std::size_t> alt_;
};

// Rows for m = 2..max_m. Throws std::domain_error if max_m < 2.
std::vector<HzTableRow> hz_table(unsigned max_m, std::span<const GroupKind> kinds);

// ---------------------------------------------------------------------------
// Per-degree case check.

// Largest prime r with p + 1 < 2r <= n, if any.
std::optional<std::uint64_t> select_r(const PrimeTable& table, std::uint64_t n);

enum class Strategy { direct_psi_p, r_trick };
enum class Verdict { pass, fail, indeterminate };

std::string_view to_string(Strategy strategy);
std::string_view to_string(Verdict verdict);

struct StrategyOutcome {
  Strategy strategy = Strategy::direct_psi_p;
  std::optional<std::uint64_t> r;
  std::uint64_t t_star = 0;
  std::uint64_t support_m = 0;
  bool decided = false;
  std::size_t h_vertices = 0;
  std::size_t h_edges = 0;
  std::size_t h_sum_bound = 0;
  std::vector<BigNat> witness;
  std::vector<CycleType> witness_types;
  std::string reason;  // set when !decided
};

struct Certificate {
  std::uint64_t n = 0;
  GroupKind kind = GroupKind::sym;
  Strategy strategy = Strategy::direct_psi_p;
  std::optional<std::uint64_t> r;
  std::uint64_t t_star = 0;
  std::uint64_t support_m = 0;
  std::uint64_t omega_count = 0;
  std::uint64_t p = 0;
  std::size_t h_value = 0;
  std::size_t h_value_edges = 0;
  std::size_t h_sum_bound = 0;
  Verdict verdict = Verdict::indeterminate;
  std::vector<BigNat> witness_chain;
  std::vector<CycleType> witness_types;  // moved part of a type realising each witness
  bool phi_excluded = false;
  std::vector<std::string> notes;
  std::vector<StrategyOutcome> candidates;
  std::chrono::microseconds elapsed{0};
};

// Shared read-only state for case checks: the prime table and R_i heights.
class Verifier {
 public:
  explicit Verifier(std::uint64_t max_n, VerifyConfig config = {});

  const PrimeTable& primes() const { return primes_; }
  const MovedHeights& moved_heights() const { return moved_; }
  const VerifyConfig& config() const { return config_; }

  // Requires 23 <= n <= max_n; throws std::domain_error / std::out_of_range.
  // Throws std::logic_error if a computed height exceeds the sum bound.
  Certificate check_case(std::uint64_t n, GroupKind kind) const;

  OmegaCheck check_omega(std::uint64_t n) const { return check_omega_lemma(primes_, n); }

 private:
  StrategyOutcome evaluate(std::uint64_t n, GroupKind kind, Strategy strategy,
                           std::optional<std::uint64_t> r, std::uint64_t t_star) const;

  VerifyConfig config_;
  PrimeTable primes_;
  MovedHeights moved_;
};

// ---------------------------------------------------------------------------
// Batch scans. Results are ordered by (n, kind) regardless of scheduling.

struct ScanReport {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::vector<GroupKind> kinds;
  std::vector<Certificate> certificates;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t indeterminate = 0;

  bool all_pass() const { return failed == 0 && indeterminate == 0; }
};

// Requires 23 <= from <= to. jobs == 0 is treated as 1.
ScanReport scan_range(const Verifier& verifier, std::uint64_t from, std::uint64_t to,
                      std::span<const GroupKind> kinds, unsigned jobs);

struct OmegaSweep {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::size_t checked = 0;
  std::vector<OmegaCheck> failures;

  bool all_pass() const { return failures.empty(); }
};

// Requires 3 <= from <= to <= table.limit().
OmegaSweep sweep_omega(const PrimeTable& table, std::uint64_t from, std::uint64_t to, unsigned jobs);

}  // namespace cspec
