#pragma once

#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mukade/scalar.hpp"

namespace mukade {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorts, drops zeros
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                 // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const;      // 1-based, 0 beyond the length
  Partition conjugate() const;
  int n() const;                    // sum (i-1) lambda_i
  std::pair<int, int> arm_leg(int i, int j) const;
  bool contains(const Partition& o) const;
  bool contains_cell(int i, int j) const { return i >= 1 && j >= 1 && (*this)[i] >= j; }
  std::vector<std::pair<int, int>> cells() const;
  // multiplicities m_i for i = 1..max part
  std::vector<int> multiplicities() const;

  auto operator<=>(const Partition& o) const = default;
  std::string str() const;

 private:
  std::vector<int> parts_;
};

using NTuple = std::vector<Partition>;

int total_size(const NTuple& t);
std::string ntuple_str(const NTuple& t);
Partition parse_partition(const std::string& text);
NTuple parse_ntuple(const std::string& text);

// all partitions of n, decreasing lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions(int n);
// all N-tuples of total size n
std::vector<NTuple> ntuples(int N, int n);
long count_ntuples(int N, int n);

std::pair<std::set<std::pair<int, int>>, std::set<std::pair<int, int>>> add_remove_sets(
    const Partition& l);

enum class Order { greater, less, equal, incomparable };
Order star_compare(const NTuple& a, const NTuple& b);
// dominance order on partitions of the same size
Order dominance_compare(const Partition& a, const Partition& b);

Partition truncate_B(const Partition& l, int r, int s);

struct Flaming {
  Scalar f, g;
};
Flaming flaming_factors(const Partition& l);

// z_lambda = prod i^{m_i} m_i!
mpz_class z_lambda(const Partition& l);
// (1 - q^n)/(1 - t^n), cached
const Scalar& kappa(int n);
// c_lambda = prod (1 - q^a t^{l+1}), c'_lambda = prod (1 - q^{a+1} t^l)
Scalar c_lambda(const Partition& l);
Scalar cprime_lambda(const Partition& l);

inline std::ostream& operator<<(std::ostream& os, const Partition& l) { return os << l.str(); }

}  // namespace mukade
