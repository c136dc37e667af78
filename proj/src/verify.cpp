#include "cspec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace cspec {

namespace {

constexpr std::uint64_t kFirstScannedDegree = 23;

// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
// exception thrown by any worker stops the remaining work and is rethrown.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    const unsigned spawned = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    workers.reserve(spawned);
    for (unsigned w = 0; w < spawned; ++w) {
      workers.emplace_back([&] {
        while (!stop.load(std::memory_order_relaxed)) {
          std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= count) return;
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            stop = true;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::size_t chain_vertices(const Spectrum& spectrum) {
  return height(spectrum.values()).witness.size();
}

}  // namespace

// ---------------------------------------------------------------------------

OmegaCheck check_omega_lemma(const PrimeTable& table, std::uint64_t n) {
  if (n < 3) {
    throw std::domain_error("omega check requires n >= 3, got " + std::to_string(n));
  }
  // Counted through the rank index; materialising Omega would cost O(n) per call.
  OmegaCheck check;
  check.n = n;
  check.p = table.largest_prime_at_most(n).value();
  check.omega_count = table.pi(n) - table.pi(n / 2);
  check.ratio = factorial_ratio(n, check.p);
  check.ratio_bits = bit_length(check.ratio);
  BigNat power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, check.omega_count);
  check.power_bits = bit_length(power);
  check.holds = power > check.ratio;
  return check;
}

// ---------------------------------------------------------------------------

const std::map<unsigned, unsigned>& published_hz_bounds() {
  static const std::map<unsigned, unsigned> bounds{
      {2, 1},   {3, 2},   {4, 3},   {5, 5},   {6, 6},   {7, 8},  {8, 11},
      {9, 14},  {10, 18}, {11, 21}, {12, 26}, {13, 30}, {18, 69},
  };
  return bounds;
}

std::vector<KindConvention> HzTableRow::exceeding() const {
  std::vector<KindConvention> out;
  if (!published_bound) return out;
  for (const auto& [key, value] : computed) {
    if (value > *published_bound) out.push_back(key);
  }
  return out;
}

bool HzTableRow::reproduced() const {
  if (!published_bound) return true;
  return std::any_of(computed.begin(), computed.end(),
                     [this](const auto& entry) { return entry.second <= *published_bound; });
}

MovedHeights::MovedHeights(unsigned max_i) : max_i_(max_i) {
  sym_.reserve(max_i + 1);
  alt_.reserve(max_i + 1);
  for (unsigned i = 0; i <= max_i; ++i) {
    sym_.push_back(chain_vertices(moved_class_sizes(GroupKind::sym, i)));
    alt_.push_back(chain_vertices(moved_class_sizes(GroupKind::alt, i)));
  }
}

std::size_t MovedHeights::height(GroupKind kind, unsigned i, Convention convention) const {
  if (i > max_i_) {
    throw std::out_of_range("R_" + std::to_string(i) + " not memoised (max " +
                            std::to_string(max_i_) + ")");
  }
  return chain_height(kind == GroupKind::sym ? sym_[i] : alt_[i], convention);
}

std::size_t MovedHeights::sum(GroupKind kind, unsigned m, Convention convention) const {
  std::size_t total = 0;
  for (unsigned i = 1; i <= m; ++i) total += height(kind, i, convention);
  return total;
}

std::vector<HzTableRow> hz_table(unsigned max_m, std::span<const GroupKind> kinds) {
  if (max_m < 2) {
    throw std::domain_error("hz_table requires max_m >= 2");
  }
  const MovedHeights heights(max_m);
  const auto& bounds = published_hz_bounds();
  std::vector<HzTableRow> rows;
  for (unsigned m = 2; m <= max_m; ++m) {
    HzTableRow row;
    row.m = m;
    if (auto it = bounds.find(m); it != bounds.end()) row.published_bound = it->second;
    for (GroupKind kind : kinds) {
      for (Convention convention : {Convention::vertices, Convention::edges}) {
        row.computed[{kind, convention}] = heights.sum(kind, m, convention);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------

std::optional<std::uint64_t> select_r(const PrimeTable& table, std::uint64_t n) {
  const std::uint64_t p = omega_set(table, n).p;
  auto r = table.largest_prime_at_most(n / 2);
  if (!r || 2 * *r <= p + 1) return std::nullopt;
  return r;
}

std::string_view to_string(Strategy strategy) {
  return strategy == Strategy::direct_psi_p ? "direct-psi-p" : "r-trick";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::indeterminate: return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

namespace {

// Largest n - (largest prime <= n) over the scanned degrees; bounds every
// residual support a case check can ask for.
unsigned widest_residual(const PrimeTable& table, std::uint64_t max_n) {
  std::uint64_t widest = 0;
  std::uint64_t last_prime = 2;
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    if (table.is_prime(n)) last_prime = n;
    if (n >= kFirstScannedDegree) widest = std::max(widest, n - last_prime);
  }
  return static_cast<unsigned>(widest);
}

}  // namespace

Verifier::Verifier(std::uint64_t max_n, VerifyConfig config)
    : config_(config),
      primes_(std::max<std::uint64_t>(max_n, 2)),
      moved_(std::min(config.support_cap, widest_residual(primes_, max_n))) {}

StrategyOutcome Verifier::evaluate(std::uint64_t n, GroupKind kind, Strategy strategy,
                                   std::optional<std::uint64_t> r, std::uint64_t t_star) const {
  StrategyOutcome outcome;
  outcome.strategy = strategy;
  outcome.r = r;
  outcome.t_star = t_star;
  outcome.support_m = n - t_star;
  const auto m = static_cast<unsigned>(outcome.support_m);
  if (outcome.support_m > config_.support_cap || m > moved_.max_i()) {
    outcome.reason = "residual support " + std::to_string(outcome.support_m) +
                     " exceeds the enumeration cap " + std::to_string(config_.support_cap);
    return outcome;
  }

  const Spectrum psi = psi_set(kind, static_cast<unsigned>(n), static_cast<unsigned>(t_star));
  const auto chain = longest_divisor_chain(psi.values());
  if (!psi.empty() && chain.size() > bit_length(psi.values().back())) {
    throw std::logic_error("chain in Psi_" + std::to_string(t_star) + " for n=" +
                           std::to_string(n) + " breaks the doubling bound");
  }
  for (std::size_t index : chain) {
    outcome.witness.push_back(psi.values()[index]);
    outcome.witness_types.push_back(psi.representatives()[index]);
  }
  outcome.h_vertices = chain.size();
  outcome.h_edges = chain_height(chain.size(), Convention::edges);
  outcome.h_sum_bound = moved_.sum(kind, m, Convention::vertices);
  if (outcome.h_vertices > outcome.h_sum_bound) {
    throw std::logic_error("h(Psi_" + std::to_string(t_star) + ") = " +
                           std::to_string(outcome.h_vertices) + " exceeds sum of h(R_i) = " +
                           std::to_string(outcome.h_sum_bound) + " for n=" + std::to_string(n) +
                           " kind=" + std::string(to_string(kind)));
  }
  outcome.decided = true;
  return outcome;
}

Certificate Verifier::check_case(std::uint64_t n, GroupKind kind) const {
  const auto start = std::chrono::steady_clock::now();
  if (n < kFirstScannedDegree) {
    throw std::domain_error("case check requires n >= 23, got " + std::to_string(n));
  }
  const OmegaData omega = omega_set(primes_, n);

  Certificate cert;
  cert.n = n;
  cert.kind = kind;
  cert.omega_count = omega.count;
  cert.p = omega.p;

  cert.candidates.push_back(evaluate(n, kind, Strategy::direct_psi_p, std::nullopt, omega.p));
  const auto r = select_r(primes_, n);
  if (r) {
    cert.candidates.push_back(evaluate(n, kind, Strategy::r_trick, r, 2 * *r));
    cert.notes.push_back("r-trick residual supports taken as [2, n-2r] from the Psi definition, "
                         "not 0 <= i <= n-2r+2");
  } else {
    cert.notes.push_back("no prime r with p+1 < 2r <= n; direct Psi_p strategy only");
  }

  const StrategyOutcome* chosen = nullptr;
  for (const auto& candidate : cert.candidates) {
    if (candidate.decided && (!chosen || candidate.h_vertices < chosen->h_vertices)) {
      chosen = &candidate;
    }
  }

  cert.phi_excluded = omega.count >= 2;
  if (!cert.phi_excluded) {
    cert.notes.push_back("|Omega| < 2: classes containing a t-cycle were not excluded");
  }

  if (!chosen) {
    const auto& first = cert.candidates.front();
    cert.strategy = first.strategy;
    cert.t_star = first.t_star;
    cert.support_m = first.support_m;
    cert.verdict = Verdict::indeterminate;
    for (const auto& candidate : cert.candidates) {
      cert.notes.push_back(std::string(to_string(candidate.strategy)) + ": " + candidate.reason);
    }
  } else {
    cert.strategy = chosen->strategy;
    cert.r = chosen->r;
    cert.t_star = chosen->t_star;
    cert.support_m = chosen->support_m;
    cert.h_value = chosen->h_vertices;
    cert.h_value_edges = chosen->h_edges;
    cert.h_sum_bound = chosen->h_sum_bound;
    cert.witness_chain = chosen->witness;
    cert.witness_types = chosen->witness_types;
    const std::size_t decisive = std::min(cert.h_value, cert.h_sum_bound);
    cert.verdict = cert.omega_count > decisive ? Verdict::pass : Verdict::fail;
  }

  cert.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return cert;
}

// ---------------------------------------------------------------------------

ScanReport scan_range(const Verifier& verifier, std::uint64_t from, std::uint64_t to,
                      std::span<const GroupKind> kinds, unsigned jobs) {
  if (from < kFirstScannedDegree || from > to) {
    throw std::domain_error("scan requires 23 <= from <= to");
  }
  ScanReport report;
  report.from = from;
  report.to = to;
  report.kinds.assign(kinds.begin(), kinds.end());

  const std::size_t per_n = kinds.size();
  const std::size_t total = static_cast<std::size_t>(to - from + 1) * per_n;
  report.certificates.resize(total);
  parallel_for(total, jobs, [&](std::size_t index) {
    const std::uint64_t n = from + index / per_n;
    report.certificates[index] = verifier.check_case(n, kinds[index % per_n]);
  });

  for (const auto& cert : report.certificates) {
    switch (cert.verdict) {
      case Verdict::pass: ++report.passed; break;
      case Verdict::fail: ++report.failed; break;
      case Verdict::indeterminate: ++report.indeterminate; break;
    }
  }
  return report;
}

OmegaSweep sweep_omega(const PrimeTable& table, std::uint64_t from, std::uint64_t to,
                       unsigned jobs) {
  if (from < 3 || from > to) {
    throw std::domain_error("omega sweep requires 3 <= from <= to");
  }
  OmegaSweep sweep;
  sweep.from = from;
  sweep.to = to;
  const std::size_t total = static_cast<std::size_t>(to - from + 1);
  std::vector<std::uint8_t> held(total, 0);
  parallel_for(total, jobs, [&](std::size_t index) {
    held[index] = check_omega_lemma(table, from + index).holds ? 1 : 0;
  });
  sweep.checked = total;
  for (std::size_t index = 0; index < total; ++index) {
    if (!held[index]) sweep.failures.push_back(check_omega_lemma(table, from + index));
  }
  return sweep;
}

}  // namespace cspec
