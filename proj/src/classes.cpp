#include "cspec/classes.hpp"

#include <algorithm>
#include <string>

namespace cspec {

std::string_view to_string(GroupKind kind) { return kind == GroupKind::sym ? "sym" : "alt"; }

GroupKind parse_group_kind(std::string_view text) {
  if (text == "sym" || text == "Sym") {
    return GroupKind::sym;
  }
  if (text == "alt" || text == "Alt") {
    return GroupKind::alt;
  }
  throw std::invalid_argument("unknown group kind: " + std::string(text));
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::full: return "full";
    case Family::moved: return "moved";
    case Family::phi: return "phi";
    case Family::psi: return "psi";
  }
  return "full";
}

Family parse_family(std::string_view text) {
  if (text == "full") return Family::full;
  if (text == "moved") return Family::moved;
  if (text == "phi") return Family::phi;
  if (text == "psi") return Family::psi;
  throw std::invalid_argument("unknown spectrum family: " + std::string(text));
}

Spectrum::Spectrum(GroupKind kind, unsigned n, Family family, std::optional<unsigned> t,
                   std::vector<Member> members)
    : kind_(kind), n_(n), family_(family), t_(t) {
  std::stable_sort(members.begin(), members.end(),
                   [](const Member& a, const Member& b) { return cmp(a.value, b.value) < 0; });
  values_.reserve(members.size());
  representatives_.reserve(members.size());
  for (auto& member : members) {
    if (!values_.empty() && values_.back() == member.value) {
      continue;
    }
    values_.push_back(std::move(member.value));
    representatives_.push_back(std::move(member.type));
  }
}

bool Spectrum::contains(const BigNat& value) const {
  return std::binary_search(values_.begin(), values_.end(), value,
                            [](const BigNat& a, const BigNat& b) { return cmp(a, b) < 0; });
}

BigNat group_order(GroupKind kind, unsigned n) {
  if (kind == GroupKind::alt) {
    if (n < 2) {
      return 1;
    }
    return factorial(n) / 2;
  }
  return factorial(n);
}

namespace {

void require_support(const CycleType& type, unsigned n) {
  if (type.support() > n) {
    throw std::domain_error("cycle type " + type.to_string() + " has support " +
                            std::to_string(type.support()) + " > degree " + std::to_string(n));
  }
}

// prod over k >= 2 of k^{m_k} * m_k!
BigNat moved_centralizer_factor(const CycleType& moved) {
  BigNat z = 1;
  for (const auto& [part, count] : moved.multiplicities()) {
    BigNat power;
    mpz_ui_pow_ui(power.get_mpz_t(), part, count);
    z *= power;
    z *= factorial(count);
  }
  return z;
}

// n!/z computed as a falling factorial over the moved points only.
BigNat sym_class_size(const CycleType& moved, unsigned n) {
  return falling_factorial(n, moved.support()) / moved_centralizer_factor(moved);
}

void append_sizes(std::vector<Spectrum::Member>& out, GroupKind kind, unsigned n,
                  const CycleType& type) {
  CycleType moved = type.without_fixed_points();
  for (auto& size : class_size(kind, n, moved)) {
    out.push_back({std::move(size), moved});
  }
}

}  // namespace

BigNat centralizer_order_sym(const CycleType& type, unsigned n) {
  require_support(type, n);
  CycleType moved = type.without_fixed_points();
  return factorial(n - moved.support()) * moved_centralizer_factor(moved);
}

bool splits_in_alt(const CycleType& type, unsigned n) {
  if (n < 2) {
    return false;
  }
  CycleType moved = type.without_fixed_points();
  if (n - moved.support() > 1) {
    return false;
  }
  return std::all_of(moved.multiplicities().begin(), moved.multiplicities().end(),
                     [](const auto& entry) { return entry.first % 2 == 1 && entry.second == 1; });
}

std::vector<BigNat> class_size(GroupKind kind, unsigned n, const CycleType& type) {
  require_support(type, n);
  CycleType moved = type.without_fixed_points();
  if (kind == GroupKind::sym) {
    return {sym_class_size(moved, n)};
  }
  if (parity(moved) == Parity::odd) {
    throw std::domain_error("odd cycle type " + type.to_string() + " is not in Alt_" +
                            std::to_string(n));
  }
  if (n < 2) {
    return {BigNat(1)};
  }
  BigNat size = sym_class_size(moved, n);
  if (splits_in_alt(moved, n)) {
    BigNat half = size / 2;
    return {half, half};
  }
  return {size};
}

Spectrum spectrum(GroupKind kind, unsigned n, const SpectrumOptions& options) {
  if (n > options.cap && !options.override_cap) {
    throw EnumerationCapError("full spectrum of degree " + std::to_string(n) +
                              " exceeds the enumeration cap " + std::to_string(options.cap) +
                              "; pass an explicit override to enumerate anyway");
  }
  std::vector<Spectrum::Member> members;
  for (const CycleType& type : partitions(n)) {
    if (kind == GroupKind::alt && parity(type) == Parity::odd) {
      continue;
    }
    append_sizes(members, kind, n, type);
  }
  return Spectrum(kind, n, Family::full, std::nullopt, std::move(members));
}

Spectrum moved_class_sizes(GroupKind kind, unsigned i) {
  std::vector<Spectrum::Member> members;
  for (const CycleType& type : fixed_point_free_partitions(i)) {
    if (kind == GroupKind::alt && parity(type) == Parity::odd) {
      continue;
    }
    append_sizes(members, kind, i, type);
  }
  return Spectrum(kind, i, Family::moved, std::nullopt, std::move(members));
}

Spectrum phi_set(GroupKind kind, unsigned n, unsigned t) {
  if (t == 0 || t > n || 2 * t <= n) {
    throw std::domain_error("phi_set requires n/2 < t <= n (n=" + std::to_string(n) +
                            ", t=" + std::to_string(t) + ")");
  }
  CycleType cycle = CycleType::from_parts({t});
  std::vector<Spectrum::Member> members;
  for (const CycleType& rest : partitions(n - t)) {
    CycleType type = cycle.disjoint_union(rest);
    if (kind == GroupKind::alt && parity(type) == Parity::odd) {
      continue;
    }
    append_sizes(members, kind, n, type);
  }
  return Spectrum(kind, n, Family::phi, t, std::move(members));
}

Spectrum psi_set(GroupKind kind, unsigned n, unsigned t, std::optional<unsigned> support_cap) {
  if (t > n) {
    throw std::domain_error("psi_set requires t <= n (n=" + std::to_string(n) +
                            ", t=" + std::to_string(t) + ")");
  }
  unsigned max_support = n - t;
  if (support_cap) {
    max_support = std::min(max_support, *support_cap);
  }
  std::vector<Spectrum::Member> members;
  for (unsigned m = 2; m <= max_support; ++m) {
    for (const CycleType& type : fixed_point_free_partitions(m)) {
      if (kind == GroupKind::alt && parity(type) == Parity::odd) {
        continue;
      }
      append_sizes(members, kind, n, type);
    }
  }
  return Spectrum(kind, n, Family::psi, t, std::move(members));
}

}  // namespace cspec
