#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ptriv/integer_matrix.hpp"

namespace ptriv {

// Finitely generated abelian group in canonical form:
//   Z^free_rank  (+)  Z/t_1 (+) ... (+) Z/t_s
// with t_1 | t_2 | ... | t_s and every t_i >= 2.  Equality of canonical
// forms is isomorphism.
class FinAbGroup {
 public:
  FinAbGroup() = default;  // trivial group
  FinAbGroup(std::size_t free_rank, std::vector<Int> torsion);

  // Canonicalizes an arbitrary direct sum of cyclic groups: orders of 0
  // count toward the free rank, orders of 1 are dropped, the rest are
  // rearranged into a divisibility chain via prime-power multiplicities.
  static FinAbGroup from_cyclic_orders(std::size_t free_rank,
                                       const std::vector<Int>& orders);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }
  bool trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  // Number of generators in the canonical presentation (torsion first,
  // then free), the convention used by subquotient presentations.
  std::size_t generator_count() const { return torsion_.size() + free_rank_; }

  FinAbGroup direct_sum(const FinAbGroup& other) const;
  FinAbGroup tensor_mod(const Int& q) const;  // G (x) Z/q
  FinAbGroup tor_mod(const Int& q) const;     // Tor(G, Z/q)

  // Relations of the canonical presentation: generator_count x torsion
  // matrix whose columns are t_i * e_i.
  IntegerMatrix relation_matrix() const;

  bool operator==(const FinAbGroup&) const = default;

  // "0", "Z", "Z^2", "Z2", "Z2^3", "Z+Z2+Z4", ...
  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Int> torsion_;
};

// Degree-indexed family of groups; degrees with trivial groups are absent.
struct GradedGroup {
  std::map<int, FinAbGroup> by_degree;

  const FinAbGroup& at(int degree) const;  // trivial group if absent
  void set(int degree, FinAbGroup g);      // drops trivial groups
  bool operator==(const GradedGroup&) const = default;
  std::string to_string() const;  // "{0: Z, 4: Z2}"
};

}  // namespace ptriv
