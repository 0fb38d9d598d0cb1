#pragma once

#include <map>
#include <vector>

#include "zvertex/rational.hpp"

namespace zv {

// Integer partition, parts sorted descending.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
  }

  int size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int len() const { return static_cast<int>(parts.size()); }

  // Order of the part-permutation stabilizer: product of mult! over values.
  long aut_order() const {
    long acc = 1;
    int run = 1;
    for (std::size_t i = 1; i <= parts.size(); ++i) {
      if (i < parts.size() && parts[i] == parts[i - 1]) {
        ++run;
      } else {
        for (int k = 2; k <= run; ++k) acc *= k;
        run = 1;
      }
    }
    return acc;
  }

  long z_factor() const {
    long acc = aut_order();
    for (int p : parts) acc *= p;
    return acc;
  }

  bool operator<(const Partition& o) const { return parts < o.parts; }
  bool operator==(const Partition& o) const { return parts == o.parts; }
};

// All partitions of exactly n (n >= 0), descending parts, deterministic order.
inline void partitions_of(int n, int max_part, std::vector<Partition>* out, std::vector<int>* cur) {
  if (n == 0) {
    out->push_back(Partition(*cur));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur->push_back(p);
    partitions_of(n - p, p, out, cur);
    cur->pop_back();
  }
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_of(n, n, &out, &cur);
  return out;
}

// Partitions with exactly len parts and size <= max_size.
inline std::vector<Partition> partitions_with_len(int len, int max_size) {
  std::vector<Partition> out;
  for (int n = len; n <= max_size; ++n)
    for (const auto& p : partitions_of(n))
      if (p.len() == len) out.push_back(p);
  return out;
}

// Partitions of any length with size <= max_size (size >= 1).
inline std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_size; ++n) {
    auto ps = partitions_of(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

inline long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace zv
