#include "cspec/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace cspec {

CycleType::CycleType(Multiplicities parts) : parts_(std::move(parts)) {
  for (auto it = parts_.begin(); it != parts_.end();) {
    if (it->first == 0) {
      throw std::invalid_argument("cycle type with a part of size 0");
    }
    if (it->second == 0) {
      it = parts_.erase(it);
      continue;
    }
    support_ += it->first * it->second;
    num_parts_ += it->second;
    ++it;
  }
}

CycleType CycleType::from_parts(const std::vector<unsigned>& parts) {
  Multiplicities counts;
  for (unsigned part : parts) {
    if (part == 0) {
      throw std::invalid_argument("cycle type with a part of size 0");
    }
    ++counts[part];
  }
  return CycleType(std::move(counts));
}

unsigned CycleType::multiplicity(unsigned part) const {
  auto it = parts_.find(part);
  return it == parts_.end() ? 0 : it->second;
}

std::vector<unsigned> CycleType::parts() const {
  std::vector<unsigned> out;
  out.reserve(num_parts_);
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    out.insert(out.end(), it->second, it->first);
  }
  return out;
}

CycleType CycleType::without_fixed_points() const {
  Multiplicities moved = parts_;
  moved.erase(1);
  return CycleType(std::move(moved));
}

CycleType CycleType::disjoint_union(const CycleType& other) const {
  Multiplicities merged = parts_;
  for (const auto& [part, count] : other.parts_) {
    merged[part] += count;
  }
  return CycleType(std::move(merged));
}

std::string CycleType::to_string() const {
  std::string out = "(";
  bool first = true;
  for (unsigned part : parts()) {
    if (!first) {
      out += ',';
    }
    out += std::to_string(part);
    first = false;
  }
  out += ')';
  return out;
}

Parity parity(const CycleType& type) {
  return (type.support() - type.num_parts()) % 2 == 0 ? Parity::even : Parity::odd;
}

namespace {

// Can `total` be written as a sum of parts each in [lo, hi]?
bool representable(unsigned total, unsigned lo, unsigned hi) {
  if (total == 0) {
    return true;
  }
  if (hi < lo || total < lo) {
    return false;
  }
  unsigned fewest = (total + hi - 1) / hi;
  unsigned most = total / lo;
  return fewest <= most;
}

// Appends the lexicographically largest non-increasing completion of `total`
// with parts in [lo, hi]. Caller guarantees representable(total, lo, hi).
void greedy_fill(std::vector<unsigned>& parts, unsigned total, unsigned lo, unsigned hi) {
  while (total > 0) {
    unsigned part = std::min(hi, total);
    while (!representable(total - part, lo, part)) {
      --part;
    }
    parts.push_back(part);
    total -= part;
    hi = part;
  }
}

}  // namespace

PartitionStream::iterator::iterator(unsigned total, unsigned min_part)
    : min_part_(std::max(min_part, 1u)) {
  if (!representable(total, min_part_, total)) {
    return;
  }
  greedy_fill(parts_, total, min_part_, total);
  done_ = false;
}

PartitionStream::iterator& PartitionStream::iterator::operator++() {
  if (done_) {
    return *this;
  }
  // Walk back from the tail looking for the rightmost part that can be
  // lowered with the freed mass still representable below it; lower it as
  // little as possible.
  unsigned tail = 0;
  for (std::size_t j = parts_.size(); j-- > 0;) {
    const unsigned part = parts_[j];
    for (unsigned lowered = part - 1; lowered >= min_part_; --lowered) {
      const unsigned rest = tail + (part - lowered);
      if (representable(rest, min_part_, lowered)) {
        parts_.resize(j);
        parts_.push_back(lowered);
        greedy_fill(parts_, rest, min_part_, lowered);
        return *this;
      }
    }
    tail += part;
  }
  parts_.clear();
  done_ = true;
  return *this;
}

PartitionStream partitions(unsigned m) { return PartitionStream(m, 1); }

PartitionStream fixed_point_free_partitions(unsigned m) { return PartitionStream(m, 2); }

}  // namespace cspec
