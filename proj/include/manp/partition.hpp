#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace manp {

/// A partition of n: a weakly decreasing sequence of positive integers.
///
/// Immutable once constructed. The empty partition (n = 0) is a valid value.
/// Comparison is lexicographic on the parts; the canonical enumeration order
/// used throughout the library is the reverse of that (see CanonicalOrder).
class Partition {
 public:
  Partition() = default;

  /// Throws InvalidArgument unless every part is positive and the
  /// sequence is weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int total() const noexcept { return total_; }
  bool empty() const noexcept { return parts_.empty(); }

  int operator[](std::size_t i) const { return parts_[i]; }

  /// parts[i] for i < length(), 0 beyond. Convenient for conjugate indexing.
  int part_or_zero(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int value) const noexcept;

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  /// "a,b,c" with every part written out; "" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Reverse lexicographic order: (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// The split mu = (core, 1^ones) with every core part >= 2.
struct CoreSplit {
  Partition core;
  int ones = 0;

  int core_blocks() const noexcept { return static_cast<int>(core.length()); }
  Partition join() const;
};

Partition conjugate(const Partition& p);

/// Drops zeros and sorts the rest into weakly decreasing order.
/// Throws InvalidArgument on negative entries.
Partition ord(std::span<const int> seq);
inline Partition ord(std::initializer_list<int> seq) {
  return ord(std::span<const int>(seq.begin(), seq.size()));
}

/// All partitions of n, each exactly once, in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

CoreSplit split_core(const Partition& p);

/// Parses "3,3,2,1^8". Whitespace around tokens is ignored; "" is the empty
/// partition. The expanded sequence must be weakly decreasing.
Partition parse_partition(std::string_view text);

}  // namespace manp
