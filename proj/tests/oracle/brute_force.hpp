#pragma once

// Test-only oracles. Nothing here calls into the library: permutations are
// enumerated explicitly, conjugacy orbits are walked element by element, and
// partition numbers come from Euler's pentagonal recurrence.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<unsigned>;

inline std::uint64_t factorial_u64(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

// Sign by inversion count.
inline bool is_even(const Perm& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0;
}

inline std::vector<unsigned> cycle_lengths(const Perm& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<unsigned> lengths;
  for (unsigned start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    unsigned length = 0;
    for (unsigned at = start; !seen[at]; at = perm[at]) {
      seen[at] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

inline unsigned moved_points(const Perm& perm) {
  unsigned moved = 0;
  for (unsigned i = 0; i < perm.size(); ++i) moved += perm[i] != i;
  return moved;
}

inline Perm compose(const Perm& a, const Perm& b) {  // (a * b)(x) = a(b(x))
  Perm out(a.size());
  for (unsigned i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (unsigned i = 0; i < a.size(); ++i) out[a[i]] = i;
  return out;
}

inline std::uint64_t lehmer_rank(const Perm& perm) {
  std::uint64_t rank = 0;
  const auto n = static_cast<unsigned>(perm.size());
  for (unsigned i = 0; i < n; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
    rank += smaller * factorial_u64(n - 1 - i);
  }
  return rank;
}

inline std::vector<Perm> group_elements(unsigned n, bool alternating) {
  std::vector<Perm> elements;
  Perm perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    if (!alternating || is_even(perm)) elements.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return elements;
}

struct ConjugacyClass {
  std::uint64_t size = 0;
  Perm representative;
};

// Orbits of the group on itself under conjugation.
inline std::vector<ConjugacyClass> conjugacy_classes(unsigned n, bool alternating) {
  const auto elements = group_elements(n, alternating);
  std::vector<bool> visited(factorial_u64(n), false);
  std::vector<ConjugacyClass> classes;
  for (const auto& g : elements) {
    if (visited[lehmer_rank(g)]) continue;
    ConjugacyClass cls;
    cls.representative = g;
    for (const auto& h : elements) {
      Perm conjugate = compose(compose(h, g), inverse(h));
      auto rank = lehmer_rank(conjugate);
      if (!visited[rank]) {
        visited[rank] = true;
        ++cls.size;
      }
    }
    classes.push_back(cls);
  }
  return classes;
}

inline std::set<std::uint64_t> class_sizes_where(const std::vector<ConjugacyClass>& classes,
                                                 const std::function<bool(const Perm&)>& keep) {
  std::set<std::uint64_t> sizes;
  for (const auto& cls : classes) {
    if (keep(cls.representative)) sizes.insert(cls.size);
  }
  return sizes;
}

// Number of elements of Sym_n commuting with g.
inline std::uint64_t centralizer_count(const Perm& g) {
  std::uint64_t count = 0;
  for (const auto& h : group_elements(static_cast<unsigned>(g.size()), false)) {
    count += compose(h, g) == compose(g, h);
  }
  return count;
}

// p(m) by Euler's pentagonal number theorem.
inline std::vector<std::uint64_t> partition_numbers(unsigned max_m) {
  std::vector<std::int64_t> p(max_m + 1, 0);
  p[0] = 1;
  for (unsigned m = 1; m <= max_m; ++m) {
    std::int64_t total = 0;
    for (std::int64_t k = 1;; ++k) {
      std::int64_t g1 = k * (3 * k - 1) / 2;
      std::int64_t g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[m - g1];
      if (g2 <= m) total += sign * p[m - g2];
    }
    p[m] = total;
  }
  return {p.begin(), p.end()};
}

// Longest divisor chain by trying every subset. |values| <= ~16.
inline std::size_t brute_force_chain(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const std::size_t count = values.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    std::vector<std::uint64_t> chosen;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask >> i & 1) chosen.push_back(values[i]);
    }
    bool chain = true;
    for (std::size_t i = 1; i < chosen.size() && chain; ++i) {
      chain = chosen[i] % chosen[i - 1] == 0;
    }
    if (chain) best = std::max(best, chosen.size());
  }
  return best;
}

inline bool is_prime_trial(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) return false;
  }
  return true;
}

}  // namespace oracle
