#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anselberg {

/// Monotone map M: {1..k_s} -> {1..k_{s+1}} with M(i) <= M(i+1) and
/// M(i) <= k_{s+1} - k_s + i. values[i-1] holds M(i).
struct InterleavingMap {
  int source_size = 0;
  int target_size = 0;
  std::vector<int> values;
  friend bool operator==(const InterleavingMap&, const InterleavingMap&) = default;
};

/// selberg: groups descending in [a,b] with t^{(s+1)}_0 = b.
/// qintegral: groups ascending in [a,b] with x^{(s+1)}_0 = a.
enum class Orientation { selberg, qintegral };

struct ChainSpec {
  std::vector<int> k; // k_1 <= ... <= k_n
  double gamma = 0;
  Orientation orientation = Orientation::selberg;
};

constexpr double gamma_switch = 1e-8;
constexpr double eps_sin = 1e-10;

/// All admissible maps in lexicographic order. Throws if ks > ks1 or ks < 0.
std::vector<InterleavingMap> enumerate_maps(int ks, int ks1);
/// (k_{s+1}-k_s+1)/(k_{s+1}+1) * C(k_s+k_{s+1}, k_s), computed exactly.
std::uint64_t count_maps(int ks, int ks1);
/// Cartesian product over s = 1..n-1 of enumerate_maps(k_s, k_{s+1}).
std::vector<std::vector<InterleavingMap>> enumerate_map_tuples(const std::vector<int>& k);

/// Closed-region membership of a flat point (t^{(1)}, ..., t^{(n)}).
bool region_contains(const ChainSpec& spec, const std::vector<InterleavingMap>& maps,
                     const std::vector<double>& point, double lo = 0, double hi = 1);

/// For a point already ordered within each group, the map values of the
/// unique region containing it, or nullopt if it violates the interlacing
/// bound. Ties go to the smaller map value.
std::optional<std::vector<std::vector<int>>> classify_point(const std::vector<int>& k, Orientation orientation,
                                                             const std::vector<double>& point);

/// One factor sin(π(i+k_{s+1}-k_s-m+1)γ)/sin(π(i+k_{s+1}-k_s)γ) of the weight.
double chain_factor(int i, int ks, int ks1, int m, double gamma);
/// sin(π u γ)/sin(π (u+1) γ).
double r_factor(int u, double gamma);
/// Π_{s,i} sin(π(i+k_{s+1}-k_s-M_s(i)+1)γ)/sin(π(i+k_{s+1}-k_s)γ); the
/// rational γ -> 0 limit for |γ| < gamma_switch. Throws std::domain_error
/// when a denominator argument is within eps_sin of an integer.
double chain_weight(const std::vector<int>& k, double gamma, const std::vector<std::vector<int>>& map_values);
double chain_weight(const ChainSpec& spec, const std::vector<InterleavingMap>& maps);

/// [[1],[2,3]] style serialisation.
std::string maps_to_json(const std::vector<InterleavingMap>& maps);

} // namespace anselberg
