#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cspec/bignat.hpp"
#include "cspec/partition.hpp"

namespace cspec {

enum class GroupKind { sym, alt };

std::string_view to_string(GroupKind kind);
GroupKind parse_group_kind(std::string_view text);

// Which class-size family a Spectrum holds.
//   full  - every class size of V_n
//   moved - R_i: class sizes in V_i of fixed-point-free elements (n == i)
//   phi   - classes of V_n containing a t-cycle
//   psi   - classes of V_n with support in [2, n - t]
enum class Family { full, moved, phi, psi };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

// Thrown when a full spectrum is requested above the enumeration cap.
class EnumerationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sorted, deduplicated set of class sizes. Each value carries one cycle type
// (fixed points stripped) realising it, chosen as the first in enumeration
// order, so a value can always be re-derived.
class Spectrum {
 public:
  struct Member {
    BigNat value;
    CycleType type;
  };

  Spectrum(GroupKind kind, unsigned n, Family family, std::optional<unsigned> t,
           std::vector<Member> members);

  GroupKind kind() const { return kind_; }
  unsigned degree() const { return n_; }
  Family family() const { return family_; }
  std::optional<unsigned> t() const { return t_; }

  const std::vector<BigNat>& values() const { return values_; }
  const std::vector<CycleType>& representatives() const { return representatives_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  bool contains(const BigNat& value) const;

 private:
  GroupKind kind_;
  unsigned n_;
  Family family_;
  std::optional<unsigned> t_;
  std::vector<BigNat> values_;
  std::vector<CycleType> representatives_;
};

struct SpectrumOptions {
  unsigned cap = 45;
  bool override_cap = false;
};

// n! for Sym, n!/2 for Alt (n >= 2), 1 for Alt_0 and Alt_1.
BigNat group_order(GroupKind kind, unsigned n);

// Order of the centralizer in Sym_n of an element of type `type` padded with
// fixed points up to degree n. Throws std::domain_error if support > n.
BigNat centralizer_order_sym(const CycleType& type, unsigned n);

// Class sizes in V_n of the elements of the given type. For Alt this is two
// equal halves when the Sym class splits, else one entry. Throws
// std::domain_error on support > n or an odd type under Alt.
std::vector<BigNat> class_size(GroupKind kind, unsigned n, const CycleType& type);

// Whether the Sym_n class of this (even) type splits into two Alt_n classes.
bool splits_in_alt(const CycleType& type, unsigned n);

Spectrum spectrum(GroupKind kind, unsigned n, const SpectrumOptions& options = {});

Spectrum moved_class_sizes(GroupKind kind, unsigned i);

// Requires n/2 < t <= n; t need not be prime.
Spectrum phi_set(GroupKind kind, unsigned n, unsigned t);

// Requires t <= n. `support_cap` truncates the largest support considered.
Spectrum psi_set(GroupKind kind, unsigned n, unsigned t,
                 std::optional<unsigned> support_cap = std::nullopt);

}  // namespace cspec
