#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "plancherel/numeric.hpp"

namespace plancherel {

// Partition of a non-negative integer: weakly decreasing positive parts.
// The empty partition (n = 0) is a first-class value; it is the start state
// of the growth process.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
    }
  }

  int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return i < rows() ? parts_[i] : 0; }  // 0-indexed, 0 past the end
  int first_row() const { return parts_.empty() ? 0 : parts_[0]; }
  int first_col() const { return rows(); }

  // Number of parts equal to j.
  int multiplicity(int j) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
  }

  // mu fits inside this partition row by row.
  bool contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 0; i < mu.rows(); ++i)
      if (mu.parts_[i] > parts_[i]) return false;
    return true;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // Canonical (reverse-lexicographic) order within a fixed n: (4) < (3,1) < (2,2) < ...
  // Across sizes, smaller n sorts first.
  friend bool operator<(const Partition& a, const Partition& b) {
    int an = a.n(), bn = b.n();
    if (an != bn) return an < bn;
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                        a.parts_.end());
  }

  // Text form "[4,2,1]"; "[]" for the empty partition.
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  static Partition from_string(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
      throw std::invalid_argument("Partition: expected \"[a,b,...]\"");
    std::vector<int> parts;
    std::string body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      parts.push_back(std::stoi(body.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return Partition(std::move(parts));
  }

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.to_string();
}

// Column lengths of the diagram.
inline Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(lambda.first_row(), 0);
  for (int i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda.parts()[i]; ++j) ++cols[j];
  return Partition(std::move(cols));
}

// Per-cell hook lengths in the shape of the partition:
// h(x) = 1 + boxes right of x + boxes below x.
struct HookGrid {
  std::vector<std::vector<int>> rows;
};

inline HookGrid hook_lengths(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  HookGrid grid;
  grid.rows.resize(lambda.rows());
  for (int i = 0; i < lambda.rows(); ++i) {
    grid.rows[i].resize(lambda.parts()[i]);
    for (int j = 0; j < lambda.parts()[i]; ++j)
      grid.rows[i][j] = (lambda.parts()[i] - j) + (conj.parts()[j] - i) - 1;
  }
  return grid;
}

// All partitions of n in canonical order, generated largest-first.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Exact dimension n!/prod h(x) of the irreducible representation indexed by
// lambda; equivalently the number of standard Young tableaux of that shape.
inline Int dimension(const Partition& lambda) {
  HookGrid grid = hook_lengths(lambda);
  Int hooks = 1;
  for (const auto& row : grid.rows)
    for (int h : row) hooks *= h;
  Int fact = factorial(lambda.n());
  if (fact % hooks != 0)
    throw InternalError("dimension: hook product does not divide n!");
  return fact / hooks;
}

// Partitions of n+1 obtained by adding one box, in canonical order.
inline std::vector<Partition> up_neighbors(const Partition& lambda) {
  std::vector<Partition> out;
  for (int i = 0; i < lambda.rows(); ++i) {
    if (i == 0 || lambda.parts()[i] < lambda.parts()[i - 1]) {
      std::vector<int> parts = lambda.parts();
      ++parts[i];
      out.emplace_back(std::move(parts));
    }
  }
  std::vector<int> parts = lambda.parts();
  parts.push_back(1);
  out.emplace_back(std::move(parts));
  return out;
}

// Partitions of n-1 obtained by removing one box, in canonical order.
inline std::vector<Partition> down_neighbors(const Partition& lambda) {
  std::vector<Partition> out;
  for (int i = lambda.rows() - 1; i >= 0; --i) {
    if (i == lambda.rows() - 1 || lambda.parts()[i] > lambda.parts()[i + 1]) {
      std::vector<int> parts = lambda.parts();
      if (--parts[i] == 0) parts.pop_back();
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

namespace detail {

inline Int path_count_rec(const Partition& tau, const Partition& mu) {
  static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> cache;
  static std::mutex cache_mutex;

  if (!mu.contains(tau)) return 0;
  if (mu.n() == tau.n()) return tau == mu ? Int(1) : Int(0);

  auto key = std::make_pair(tau.parts(), mu.parts());
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Int total = 0;
  for (const Partition& nu : down_neighbors(mu))
    if (nu.contains(tau)) total += path_count_rec(tau, nu);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::move(key), total);
  }
  return total;
}

}  // namespace detail

// Number of box-addition chains from tau up to mu in the Young lattice
// (the dimension of the skew shape mu/tau); 0 when tau is not contained in mu.
inline Int path_count(const Partition& tau, const Partition& mu) {
  return detail::path_count_rec(tau, mu);
}

// Fixed indexing of the partitions of n, shared by distributions and matrices.
class PartitionIndex {
 public:
  explicit PartitionIndex(int n) : n_(n), list_(enumerate_partitions(n)) {
    for (std::size_t i = 0; i < list_.size(); ++i) pos_[list_[i].parts()] = static_cast<int>(i);
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(list_.size()); }
  const std::vector<Partition>& list() const { return list_; }
  const Partition& at(int i) const { return list_[i]; }
  int index_of(const Partition& p) const {
    auto it = pos_.find(p.parts());
    if (it == pos_.end()) throw std::invalid_argument("PartitionIndex: partition of wrong size");
    return it->second;
  }

 private:
  int n_;
  std::vector<Partition> list_;
  std::map<std::vector<int>, int> pos_;
};

}  // namespace plancherel
