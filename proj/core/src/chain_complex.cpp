#include "ptriv/chain_complex.hpp"

#include <set>
#include <sstream>

#include "ptriv/errors.hpp"
#include "ptriv/smith.hpp"

namespace ptriv {

Coefficients Coefficients::mod(long q) {
  if (q < 2) throw BadRangeError("coefficient modulus must be >= 2");
  return {q};
}

std::string Coefficients::to_string() const {
  if (is_integers()) return "Z";
  std::ostringstream os;
  os << "Z" << modulus;
  return os.str();
}

void ChainComplex::set_rank(int degree, std::size_t rank) {
  if (rank == 0)
    ranks_.erase(degree);
  else
    ranks_[degree] = rank;
}

void ChainComplex::set_boundary(int degree, IntegerMatrix d) {
  if (d.is_zero())
    boundaries_.erase(degree);
  else
    boundaries_[degree] = std::move(d);
}

std::size_t ChainComplex::rank(int degree) const {
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

IntegerMatrix ChainComplex::boundary(int degree) const {
  auto it = boundaries_.find(degree);
  if (it != boundaries_.end()) return it->second;
  return IntegerMatrix(rank(degree - 1), rank(degree));
}

std::vector<int> ChainComplex::boundary_degrees() const {
  std::vector<int> out;
  for (const auto& [j, d] : boundaries_) out.push_back(j);
  return out;
}

int ChainComplex::lowest_degree() const {
  return ranks_.empty() ? 0 : ranks_.begin()->first;
}

int ChainComplex::top_degree() const {
  return ranks_.empty() ? 0 : ranks_.rbegin()->first;
}

void validate(const ChainComplex& c) {
  std::set<int> degrees;
  for (const auto& [j, r] : c.ranks()) {
    degrees.insert(j);
    degrees.insert(j + 1);  // d_{j+1} lands in degree j
  }
  for (int j : c.boundary_degrees()) {
    degrees.insert(j);
    degrees.insert(j + 1);
  }
  for (int j : degrees) {
    IntegerMatrix d = c.boundary(j);
    if (d.rows() != c.rank(j - 1) || d.cols() != c.rank(j)) {
      std::ostringstream os;
      os << "boundary in degree " << j << " has shape " << d.rows() << "x"
         << d.cols() << ", expected " << c.rank(j - 1) << "x" << c.rank(j);
      throw NotAComplexError(j, os.str());
    }
  }
  for (int j : degrees) {
    IntegerMatrix dd = c.boundary(j - 1) * c.boundary(j);
    if (!dd.is_zero()) {
      std::ostringstream os;
      os << "d(" << j - 1 << ") * d(" << j << ") != 0";
      throw NotAComplexError(j, os.str());
    }
  }
}

namespace {

struct MapSummary {
  std::size_t rank = 0;
  std::vector<Int> factors;
};

// Invariant-factor summaries of all boundary maps (or their transposes).
std::map<int, MapSummary> boundary_summaries(const ChainComplex& c,
                                             bool transpose) {
  std::map<int, MapSummary> out;
  for (const auto& [j, r] : c.ranks()) {
    for (int deg : {j, j + 1}) {
      if (out.count(deg)) continue;
      if (c.rank(deg) == 0 || c.rank(deg - 1) == 0) continue;
      IntegerMatrix d = c.boundary(deg);
      SmithDecomposition snf =
          smith_normal_form(transpose ? d.transposed() : d);
      out[deg] = MapSummary{snf.rank(), snf.invariant_factors};
    }
  }
  return out;
}

const MapSummary& summary_at(const std::map<int, MapSummary>& m, int deg) {
  static const MapSummary empty;
  auto it = m.find(deg);
  return it == m.end() ? empty : it->second;
}

GradedGroup integral_homology(const ChainComplex& c) {
  auto snf = boundary_summaries(c, /*transpose=*/false);
  GradedGroup out;
  for (const auto& [j, r] : c.ranks()) {
    const MapSummary& in = summary_at(snf, j + 1);  // d_{j+1}
    const MapSummary& del = summary_at(snf, j);     // d_j
    std::size_t free = r - del.rank - in.rank;
    out.set(j, FinAbGroup::from_cyclic_orders(free, in.factors));
  }
  return out;
}

GradedGroup integral_cohomology(const ChainComplex& c) {
  auto snf = boundary_summaries(c, /*transpose=*/true);
  GradedGroup out;
  for (const auto& [j, r] : c.ranks()) {
    const MapSummary& up = summary_at(snf, j + 1);   // delta^j = d_{j+1}^T
    const MapSummary& down = summary_at(snf, j);     // delta^{j-1} = d_j^T
    std::size_t free = r - up.rank - down.rank;
    out.set(j, FinAbGroup::from_cyclic_orders(free, down.factors));
  }
  return out;
}

}  // namespace

GradedGroup homology(const ChainComplex& c, const Coefficients& coeff) {
  GradedGroup integral = integral_homology(c);
  if (coeff.is_integers()) return integral;
  Int q(coeff.modulus);
  GradedGroup out;
  if (c.empty()) return out;
  for (int j = c.lowest_degree(); j <= c.top_degree() + 1; ++j) {
    FinAbGroup g =
        integral.at(j).tensor_mod(q).direct_sum(integral.at(j - 1).tor_mod(q));
    out.set(j, g);
  }
  return out;
}

GradedGroup cohomology(const ChainComplex& c, const Coefficients& coeff) {
  GradedGroup integral = integral_cohomology(c);
  if (coeff.is_integers()) return integral;
  Int q(coeff.modulus);
  GradedGroup out;
  if (c.empty()) return out;
  for (int j = c.lowest_degree() - 1; j <= c.top_degree(); ++j) {
    FinAbGroup g =
        integral.at(j).tensor_mod(q).direct_sum(integral.at(j + 1).tor_mod(q));
    out.set(j, g);
  }
  return out;
}

bool is_based(const ChainComplex& c) {
  if (c.rank(0) != 1) return false;
  if (c.lowest_degree() < 0) return false;
  return c.boundary(1).is_zero();
}

ChainComplex suspend(const ChainComplex& c, int k) {
  if (k < 1) throw BadRangeError("suspension requires k >= 1");
  if (!is_based(c))
    throw NotBasedError(
        "suspension requires a based complex "
        "(single degree-0 cell, zero d_1)");
  ChainComplex out;
  out.set_rank(0, 1);
  for (const auto& [j, r] : c.ranks()) {
    if (j == 0) continue;
    out.set_rank(j + k, r);
    if (j >= 2) out.set_boundary(j + k, c.boundary(j));
  }
  return out;
}

ChainComplex wedge(const ChainComplex& a, const ChainComplex& b) {
  if (!is_based(a) || !is_based(b))
    throw NotBasedError("wedge requires based complexes");
  ChainComplex out;
  out.set_rank(0, 1);
  std::set<int> degrees;
  for (const auto& [j, r] : a.ranks()) degrees.insert(j);
  for (const auto& [j, r] : b.ranks()) degrees.insert(j);
  for (int j : degrees) {
    if (j == 0) continue;
    out.set_rank(j, a.rank(j) + b.rank(j));
    if (j >= 2) {
      IntegerMatrix da(a.rank(j - 1), a.rank(j));
      IntegerMatrix db(b.rank(j - 1), b.rank(j));
      if (a.rank(j) > 0) da = a.boundary(j);
      if (b.rank(j) > 0) db = b.boundary(j);
      out.set_boundary(j, IntegerMatrix::block_diag(da, db));
    }
  }
  return out;
}

ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b) {
  ChainComplex out;
  if (a.empty() || b.empty()) return out;

  // Ranks and per-degree block layout: offset[n][i] is the column where
  // the (a_i (x) b_{n-i}) block starts.
  std::map<int, std::map<int, std::size_t>> offsets;
  std::map<int, std::size_t> total;
  for (const auto& [i, ra] : a.ranks())
    for (const auto& [j, rb] : b.ranks()) {
      int n = i + j;
      (void)total[n];
      offsets[n];  // ensure degree entry exists
    }
  for (auto& [n, offs] : offsets) {
    std::size_t pos = 0;
    for (const auto& [i, ra] : a.ranks()) {
      std::size_t rb = b.rank(n - i);
      if (rb == 0) continue;
      offs[i] = pos;
      pos += ra * rb;
    }
    total[n] = pos;
    out.set_rank(n, pos);
  }

  for (const auto& [n, offs] : offsets) {
    if (total.count(n - 1) == 0 || total[n - 1] == 0 || total[n] == 0)
      continue;
    IntegerMatrix d(total[n - 1], total[n]);
    const auto& prev = offsets.at(n - 1);
    for (const auto& [i, col0] : offs) {
      std::size_t ra = a.rank(i);
      std::size_t rb = b.rank(n - i);
      // dx (x) y block: lands in a-degree i-1.
      if (auto it = prev.find(i - 1); it != prev.end()) {
        IntegerMatrix da = a.boundary(i);  // ra' x ra
        std::size_t row0 = it->second;
        for (std::size_t p = 0; p < da.rows(); ++p)
          for (std::size_t q = 0; q < ra; ++q) {
            if (da.at(p, q) == 0) continue;
            for (std::size_t s = 0; s < rb; ++s)
              d.at(row0 + p * rb + s, col0 + q * rb + s) = da.at(p, q);
          }
      }
      // (-1)^i x (x) dy block: lands in a-degree i.
      if (auto it = prev.find(i); it != prev.end()) {
        IntegerMatrix db = b.boundary(n - i);  // rb' x rb
        std::size_t row0 = it->second;
        Int sign = (i % 2 == 0) ? 1 : -1;
        for (std::size_t q = 0; q < ra; ++q)
          for (std::size_t p = 0; p < db.rows(); ++p)
            for (std::size_t s = 0; s < rb; ++s) {
              if (db.at(p, s) == 0) continue;
              d.at(row0 + q * db.rows() + p, col0 + q * rb + s) =
                  sign * db.at(p, s);
            }
      }
    }
    out.set_boundary(n, std::move(d));
  }
  return out;
}

long euler_characteristic(const ChainComplex& c) {
  long chi = 0;
  for (const auto& [j, r] : c.ranks())
    chi += (j % 2 == 0) ? static_cast<long>(r) : -static_cast<long>(r);
  return chi;
}

ChainComplex point_complex() {
  ChainComplex c;
  c.set_rank(0, 1);
  return c;
}

ChainComplex sphere_complex(int n) {
  if (n < 1) throw BadRangeError("sphere dimension must be >= 1");
  ChainComplex c;
  c.set_rank(0, 1);
  c.set_rank(n, 1);
  return c;
}

}  // namespace ptriv
