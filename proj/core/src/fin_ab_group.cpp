#include "ptriv/fin_ab_group.hpp"

#include <sstream>

#include "ptriv/errors.hpp"

namespace ptriv {

FinAbGroup::FinAbGroup(std::size_t free_rank, std::vector<Int> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw BadRangeError("torsion coefficients must be >= 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw BadRangeError("torsion coefficients must form a divisor chain");
  }
}

FinAbGroup FinAbGroup::from_cyclic_orders(std::size_t free_rank,
                                          const std::vector<Int>& orders) {
  std::vector<Int> chain;
  for (const Int& n : orders) {
    if (n < 0) throw BadRangeError("cyclic order must be nonnegative");
    if (n == 0)
      ++free_rank;
    else if (n > 1)
      chain.push_back(n);
  }
  // Replacing a pair (a, b) with (gcd(a, b), lcm(a, b)) leaves the group
  // unchanged and makes the pair divisible.  Sweeping until stable turns
  // the list into the divisor chain without factoring anything, so huge
  // cyclic orders (e.g. invariant factors of dense matrices) stay cheap.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t j = i + 1; j < chain.size(); ++j) {
        if (chain[j] % chain[i] == 0) continue;
        const Int g = gcd(chain[i], chain[j]);
        chain[j] = chain[i] / g * chain[j];
        chain[i] = g;
        changed = true;
      }
  }
  std::erase(chain, Int(1));
  return FinAbGroup(free_rank, std::move(chain));
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& other) const {
  std::vector<Int> orders = torsion_;
  orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
  return from_cyclic_orders(free_rank_ + other.free_rank_, orders);
}

FinAbGroup FinAbGroup::tensor_mod(const Int& q) const {
  std::vector<Int> orders(free_rank_, q);
  for (const Int& t : torsion_) orders.push_back(gcd(t, q));
  return from_cyclic_orders(0, orders);
}

FinAbGroup FinAbGroup::tor_mod(const Int& q) const {
  std::vector<Int> orders;
  for (const Int& t : torsion_) orders.push_back(gcd(t, q));
  return from_cyclic_orders(0, orders);
}

IntegerMatrix FinAbGroup::relation_matrix() const {
  IntegerMatrix rel(generator_count(), torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) rel.at(i, i) = torsion_[i];
  return rel;
}

std::string FinAbGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& base, std::size_t count) {
    if (!first) os << "+";
    first = false;
    os << base;
    if (count > 1) os << "^" << count;
  };
  if (free_rank_ > 0) emit("Z", free_rank_);
  for (std::size_t i = 0; i < torsion_.size();) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
    emit("Z" + torsion_[i].get_str(), j - i);
    i = j;
  }
  return os.str();
}

const FinAbGroup& GradedGroup::at(int degree) const {
  static const FinAbGroup trivial_group;
  auto it = by_degree.find(degree);
  return it == by_degree.end() ? trivial_group : it->second;
}

void GradedGroup::set(int degree, FinAbGroup g) {
  if (g.trivial())
    by_degree.erase(degree);
  else
    by_degree[degree] = std::move(g);
}

std::string GradedGroup::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [deg, g] : by_degree) {
    if (!first) os << ", ";
    first = false;
    os << deg << ": " << g.to_string();
  }
  os << "}";
  return os.str();
}

}  // namespace ptriv
