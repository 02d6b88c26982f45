#include "anselberg/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace anselberg {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

bool Partition::contained_in(const Partition& other) const {
  if (length() > other.length()) return false;
  for (int i = 1; i <= length(); ++i)
    if (part(i) > other.part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.part(1), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

ArmLeg arm_leg(const Partition& lambda, int i, int j) {
  if (i < 1 || j < 1 || j > lambda.part(i))
    throw std::out_of_range("square (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not in " + lambda.to_string());
  int conj_j = 0;
  for (int p : lambda.parts())
    if (p >= j) ++conj_j;
  return {lambda.part(i) - j, j - 1, conj_j - i, i - 1};
}

long n_stat(const Partition& lambda) {
  long n = 0;
  for (int i = 1; i <= lambda.length(); ++i) n += static_cast<long>(i - 1) * lambda.part(i);
  return n;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw std::invalid_argument("dominance order needs equal weights");
  int sm = 0, sl = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 1; i <= len; ++i) {
    sm += mu.part(i);
    sl += lambda.part(i);
    if (sl < sm) return false;
  }
  return true;
}

Partition complement(const Partition& lambda, int rows, int width) {
  if (rows < 0 || width < 0 || lambda.length() > rows || lambda.part(1) > width)
    throw std::invalid_argument(lambda.to_string() + " does not fit in (" + std::to_string(width) +
                                "^" + std::to_string(rows) + ")");
  std::vector<int> out(rows);
  for (int i = 1; i <= rows; ++i) out[i - 1] = width - lambda.part(rows + 1 - i);
  return Partition(std::move(out));
}

long long z_factor(const Partition& lambda) {
  long long z = 1;
  for (int i = 1; i <= lambda.part(1); ++i) {
    const int m = lambda.multiplicity(i);
    for (int k = 1; k <= m; ++k) z *= static_cast<long long>(k) * i;
  }
  return z;
}

namespace {

void generate(int remaining, int max_part, int slots, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int weight, int max_length, int max_part) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  std::vector<int> prefix;
  generate(weight, max_part < 0 ? weight : max_part, max_length < 0 ? weight : max_length, prefix,
           out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_length, int max_part) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto block = partitions_of(w, max_length, max_part);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<Partition> partitions_inside(const Partition& outer, int weight) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(weight, outer.length(), outer.part(1)))
    if (p.contained_in(outer)) out.push_back(std::move(p));
  return out;
}

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : p.parts()) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

} // namespace anselberg
