#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace anselberg {

/// Integer partition stored as a weakly decreasing sequence with trailing
/// zeros stripped. Parts are 1-based in the accessors (`part(1)` is the
/// largest part); out-of-range indices read as zero.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument if `parts` is not weakly decreasing or has a
  /// negative entry.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const {
    return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  /// m_i(λ), the number of parts equal to i.
  int multiplicity(int i) const;

  /// μ ⊆ λ as Young diagrams.
  bool contained_in(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part sequence; the empty partition is smallest.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct ArmLeg {
  int arm;
  int arm_co;
  int leg;
  int leg_co;
  friend bool operator==(const ArmLeg&, const ArmLeg&) = default;
};

Partition conjugate(const Partition& lambda);

/// Arm, arm-colength, leg and leg-colength of the square (i, j), 1-based.
/// Throws std::out_of_range when (i, j) is not a square of λ.
ArmLeg arm_leg(const Partition& lambda, int i, int j);

/// n(λ) = Σ (i-1) λ_i.
long n_stat(const Partition& lambda);

/// μ ≤ λ in dominance order. Throws std::invalid_argument on unequal weights.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// Complement of λ inside the rectangle (N^m): result_i = N - λ_{m+1-i}.
/// Throws std::invalid_argument if λ does not fit in the rectangle.
Partition complement(const Partition& lambda, int rows, int width);

/// z_λ = Π_i i^{m_i} m_i!.
long long z_factor(const Partition& lambda);

/// All partitions of `weight` with at most `max_length` parts and largest
/// part at most `max_part` (negative bounds mean unbounded), in decreasing
/// lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int weight, int max_length = -1, int max_part = -1);

/// Partitions of every weight 0..max_weight, weight-major, each weight block
/// as in partitions_of.
std::vector<Partition> partitions_up_to(int max_weight, int max_length = -1, int max_part = -1);

/// Partitions of `weight` that are contained in `outer`.
std::vector<Partition> partitions_inside(const Partition& outer, int weight);

/// Integer vector (possibly with zeros, not necessarily sorted) reordered
/// into a partition.
Partition sorted_partition(std::vector<int> parts);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

} // namespace anselberg
