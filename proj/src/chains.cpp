#include "anselberg/chains.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace anselberg {

namespace {

void check_sizes(int ks, int ks1) {
  if (ks < 0 || ks > ks1)
    throw std::invalid_argument("interleaving maps need 0 <= k_s <= k_{s+1}, got " + std::to_string(ks) + ", " +
                                std::to_string(ks1));
}

void check_shape(const std::vector<int>& k) {
  for (std::size_t s = 0; s < k.size(); ++s)
    if (k[s] < 0 || (s && k[s] < k[s - 1])) throw std::invalid_argument("shape must satisfy 0 <= k_1 <= ... <= k_n");
}

} // namespace

std::vector<InterleavingMap> enumerate_maps(int ks, int ks1) {
  check_sizes(ks, ks1);
  std::vector<InterleavingMap> out;
  std::vector<int> v(ks);
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i == ks) {
      out.push_back({ks, ks1, v});
      return;
    }
    for (int m = lo; m <= ks1 - ks + i + 1; ++m) {
      v[i] = m;
      rec(i + 1, m);
    }
  };
  rec(0, 1);
  return out;
}

std::uint64_t count_maps(int ks, int ks1) {
  check_sizes(ks, ks1);
  // binomial(ks+ks1, ks) built incrementally stays integral at each step
  unsigned __int128 b = 1;
  for (int j = 1; j <= ks; ++j) b = b * (ks1 + j) / j;
  return static_cast<std::uint64_t>(b * (ks1 - ks + 1) / (ks1 + 1));
}

std::vector<std::vector<InterleavingMap>> enumerate_map_tuples(const std::vector<int>& k) {
  check_shape(k);
  std::vector<std::vector<InterleavingMap>> out{{}};
  for (std::size_t s = 0; s + 1 < k.size(); ++s) {
    const auto maps = enumerate_maps(k[s], k[s + 1]);
    std::vector<std::vector<InterleavingMap>> next;
    for (const auto& prefix : out)
      for (const auto& m : maps) {
        next.push_back(prefix);
        next.back().push_back(m);
      }
    out = std::move(next);
  }
  return out;
}

bool region_contains(const ChainSpec& spec, const std::vector<InterleavingMap>& maps,
                     const std::vector<double>& point, double lo, double hi) {
  const auto& k = spec.k;
  check_shape(k);
  if (maps.size() + 1 != k.size() && !(k.empty() && maps.empty()))
    throw std::invalid_argument("region_contains: need n-1 maps");
  std::size_t K = 0;
  std::vector<std::size_t> off;
  for (int v : k) off.push_back(K), K += v;
  if (point.size() != K) throw std::invalid_argument("region_contains: point has wrong dimension");
  const bool desc = spec.orientation == Orientation::selberg;
  auto at = [&](std::size_t s, int i) { return point[off[s] + i - 1]; };
  for (std::size_t s = 0; s < k.size(); ++s)
    for (int i = 1; i <= k[s]; ++i) {
      const double v = at(s, i);
      if (v < lo || v > hi) return false;
      if (i > 1 && (desc ? at(s, i - 1) < v : at(s, i - 1) > v)) return false;
    }
  for (std::size_t s = 0; s + 1 < k.size(); ++s) {
    const auto& M = maps[s];
    if (M.source_size != k[s] || M.target_size != k[s + 1] || static_cast<int>(M.values.size()) != k[s])
      throw std::invalid_argument("region_contains: map size mismatch");
    for (int i = 1; i <= k[s]; ++i) {
      const int m = M.values[i - 1];
      const double v = at(s, i);
      const double near = m - 1 == 0 ? (desc ? hi : lo) : at(s + 1, m - 1);
      const double far = at(s + 1, m);
      if (desc ? (v < far || v > near) : (v > far || v < near)) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::vector<int>>> classify_point(const std::vector<int>& k, Orientation orientation,
                                                             const std::vector<double>& point) {
  const bool desc = orientation == Orientation::selberg;
  std::vector<std::vector<int>> out;
  std::size_t off = 0;
  for (std::size_t s = 0; s + 1 < k.size(); ++s) {
    const std::size_t next = off + k[s];
    std::vector<int> m(k[s]);
    for (int i = 1; i <= k[s]; ++i) {
      const double v = point[off + i - 1];
      int cnt = 0;
      for (int j = 1; j <= k[s + 1]; ++j) {
        const double w = point[next + j - 1];
        if (desc ? w > v : w < v) ++cnt;
      }
      m[i - 1] = cnt + 1;
      if (m[i - 1] > k[s + 1] - k[s] + i) return std::nullopt;
    }
    out.push_back(std::move(m));
    off = next;
  }
  return out;
}

double r_factor(int u, double gamma) {
  if (std::abs(gamma) < gamma_switch) return static_cast<double>(u) / (u + 1);
  return std::sin(std::numbers::pi * u * gamma) / std::sin(std::numbers::pi * (u + 1) * gamma);
}

double chain_factor(int i, int ks, int ks1, int m, double gamma) {
  const int d = i + ks1 - ks;
  const int num = d - m + 1;
  if (std::abs(gamma) < gamma_switch) return static_cast<double>(num) / d;
  const double x = d * gamma;
  if (std::abs(x - std::round(x)) < eps_sin * std::max(1.0, std::abs(x)))
    throw std::domain_error("chain_weight: degenerate gamma, sin(pi*" + std::to_string(d) + "*gamma) vanishes");
  return std::sin(std::numbers::pi * num * gamma) / std::sin(std::numbers::pi * x);
}

double chain_weight(const std::vector<int>& k, double gamma, const std::vector<std::vector<int>>& map_values) {
  if (map_values.size() + 1 != k.size() && !k.empty()) throw std::invalid_argument("chain_weight: need n-1 maps");
  double w = 1;
  for (std::size_t s = 0; s + 1 < k.size(); ++s)
    for (int i = 1; i <= k[s]; ++i) w *= chain_factor(i, k[s], k[s + 1], map_values[s][i - 1], gamma);
  return w;
}

double chain_weight(const ChainSpec& spec, const std::vector<InterleavingMap>& maps) {
  std::vector<std::vector<int>> v;
  for (const auto& m : maps) v.push_back(m.values);
  return chain_weight(spec.k, spec.gamma, v);
}

std::string maps_to_json(const std::vector<InterleavingMap>& maps) {
  std::string s = "[";
  for (std::size_t a = 0; a < maps.size(); ++a) {
    if (a) s += ",";
    s += "[";
    for (std::size_t b = 0; b < maps[a].values.size(); ++b) {
      if (b) s += ",";
      s += std::to_string(maps[a].values[b]);
    }
    s += "]";
  }
  return s + "]";
}

} // namespace anselberg
