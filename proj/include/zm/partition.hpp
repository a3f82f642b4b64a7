#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zm/halfint.hpp"

namespace zm {

/// 1-based cell of a Young diagram.
struct Square {
  int row = 1;
  int col = 1;
};

/// Content of a cell: column - row.
constexpr int content(Square s) { return s.col - s.row; }

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is default-constructed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  /// 1-based part access; rows beyond the last are 0.
  int part(int i) const {
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  bool contains_square(Square s) const {
    return s.row >= 1 && s.col >= 1 && s.col <= part(s.row);
  }

  /// Graded reverse-lexicographic order: by size, then first differing
  /// part descending. This matches the enumeration order of
  /// partitions_of and makes map iteration canonical.
  std::strong_ordering operator<=>(const Partition& o) const;
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  /// "4,2,1", or "-" for the empty partition.
  std::string str() const;
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order ((n) first,
/// (1,...,1) last).
std::vector<Partition> partitions_of(int n);

/// Arm + leg + 1. Throws std::out_of_range for cells outside the diagram.
int hook_length(const Partition& p, Square s);

/// Number of standard Young tableaux, exactly: n! / prod of hooks.
mpz_class dimension(const Partition& p);

/// Subset S of Z+1/2 that differs from the vacuum {-1/2,-3/2,...} in
/// finitely many places. Stored as the deviation pair: occupied positive
/// modes and vacant negative modes, both sorted ascending. Membership of
/// every half-integer is decidable; far below the stored window the set
/// coincides with the vacuum.
class MayaSet {
 public:
  MayaSet() = default;
  MayaSet(std::vector<int> plus_twice, std::vector<int> minus_twice);

  bool contains(HalfInt k) const;

  /// Occupied positive modes (twice-values, ascending).
  const std::vector<int>& plus() const { return plus_twice_; }
  /// Vacant negative modes (twice-values, ascending).
  const std::vector<int>& minus() const { return minus_twice_; }

  int charge() const {
    return static_cast<int>(plus_twice_.size()) -
           static_cast<int>(minus_twice_.size());
  }
  /// Twice the energy sum_{S+} k - sum_{S-} k (always an even integer on
  /// charge-zero sets, where it equals 2|lambda|).
  long energy_twice() const;

  /// The first `count` members in descending order.
  std::vector<HalfInt> descending(int count) const;

  /// Number of members strictly greater than k (finite by construction).
  int count_above(HalfInt k) const;

  auto operator<=>(const MayaSet&) const = default;

 private:
  std::vector<int> plus_twice_;
  std::vector<int> minus_twice_;
};

/// S(lambda) = {lambda_i - i + 1/2}.
MayaSet maya(const Partition& p);

/// Inverse of maya. Throws std::invalid_argument when the charge is not 0.
Partition from_maya(const MayaSet& s);

/// Builds a Maya set from an explicit occupied window: all modes with
/// twice < bottom_twice are occupied, and within [bottom_twice, inf) the
/// occupied modes are exactly `window_twice`.
MayaSet maya_from_window(const std::vector<int>& window_twice, int bottom_twice);

/// Modified Frobenius coordinates (S_plus, S_minus), each descending.
struct Frobenius {
  std::vector<HalfInt> plus;
  std::vector<HalfInt> minus;
};
Frobenius frobenius(const Partition& p);

/// A rim hook (border strip) attached to or removed from a partition.
/// `target` is the other endpoint of the move; `content_sum` is the sum
/// of contents over the strip's squares.
struct RimHook {
  Partition target;
  int length = 0;
  int height = 0;
  int content_sum = 0;
};

/// All partitions mu obtained from p by adding a rim hook of r squares.
std::vector<RimHook> addable_rim_hooks(const Partition& p, int r);

/// All partitions mu obtained from p by removing a rim hook of r squares.
std::vector<RimHook> removable_rim_hooks(const Partition& p, int r);

/// r-core, r-quotient and component charges of a partition. The
/// components are indexed by the residue c = 1/2, 3/2, ..., r-1/2 of the
/// Maya modes mod r, in ascending order; component modes are re-indexed
/// by t = (k-c)/r + 1/2.
struct CoreQuotient {
  Partition core;
  std::vector<Partition> quotients;
  std::vector<int> charges;
};
CoreQuotient core_quotient(const Partition& p, int r);

/// Inverse of core_quotient: rebuilds the partition with the given r-core
/// and r-quotient.
Partition from_core_quotient(const Partition& core,
                             const std::vector<Partition>& quotients, int r);

}  // namespace zm
