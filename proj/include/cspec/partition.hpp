#pragma once

#include <cstddef>
#include <iterator>
#include <map>
#include <string>
#include <vector>

namespace cspec {

// Cycle type of a permutation, stored as part size -> multiplicity.
// Absent keys have multiplicity zero, so two cycle types describing the same
// multiset compare equal structurally.
class CycleType {
 public:
  using Multiplicities = std::map<unsigned, unsigned>;

  CycleType() = default;
  explicit CycleType(Multiplicities parts);

  // Builds from an unordered list of cycle lengths. Throws on a zero part.
  static CycleType from_parts(const std::vector<unsigned>& parts);

  const Multiplicities& multiplicities() const { return parts_; }
  unsigned multiplicity(unsigned part) const;

  // Sum of k * m_k.
  unsigned support() const { return support_; }
  unsigned num_parts() const { return num_parts_; }
  bool empty() const { return parts_.empty(); }

  // Part list in non-increasing order.
  std::vector<unsigned> parts() const;

  // Same type with all 1-cycles removed; its support is the number of moved points.
  CycleType without_fixed_points() const;

  CycleType disjoint_union(const CycleType& other) const;

  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  Multiplicities parts_;
  unsigned support_ = 0;
  unsigned num_parts_ = 0;
};

enum class Parity { even, odd };

// Sign of any permutation with this cycle type.
Parity parity(const CycleType& type);

inline Parity operator^(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

// Lazy stream of the partitions of `total` whose parts are all >= `min_part`,
// in lexicographically decreasing order of the non-increasing part list.
class PartitionStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = CycleType;
    using difference_type = std::ptrdiff_t;
    using pointer = const CycleType*;
    using reference = CycleType;

    iterator() = default;

    CycleType operator*() const { return CycleType::from_parts(parts_); }
    const std::vector<unsigned>& parts() const { return parts_; }

    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class PartitionStream;
    iterator(unsigned total, unsigned min_part);

    std::vector<unsigned> parts_;
    unsigned min_part_ = 1;
    bool done_ = true;
  };

  PartitionStream(unsigned total, unsigned min_part) : total_(total), min_part_(min_part) {}

  iterator begin() const { return iterator(total_, min_part_); }
  iterator end() const { return {}; }

 private:
  unsigned total_;
  unsigned min_part_;
};

// Every partition of m.
PartitionStream partitions(unsigned m);

// Partitions of m with no part equal to 1, i.e. cycle types of permutations
// moving every point of an m-element set.
PartitionStream fixed_point_free_partitions(unsigned m);

}  // namespace cspec
