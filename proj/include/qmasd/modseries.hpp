#pragma once

// Integer power series in q reduced modulo p^k, and the F_j family built on them.
//
// F = q * G(q) and B = q^-1 * H(q) with G, H in 1 + qZ[[q]], so
//   F_j = B^((6-j)/6) F = q^(j/6) * H^((6-j)/6) * G.
// The inner series H^((6-j)/6) G = H * y^j * G with y = H^(-1/6) is computed by
// Newton iteration, which only ever divides by 6 and so stays exact mod p^k.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "qmasd/padic.hpp"

namespace qmasd {

using ModVec = std::vector<std::uint64_t>;

/// Product truncated to n terms.
ModVec mod_mul(const ModVec& a, const ModVec& b, std::size_t n, std::uint64_t m);
/// Solves r * s = a for r (n terms), s[0] a unit. Cost is n times the support of s.
ModVec mod_divide(const ModVec& a, const ModVec& s, std::size_t n, std::uint64_t m);
/// h^(-1/d) for h[0] = 1 and d a unit mod m.
ModVec mod_inv_root(const ModVec& h, unsigned d, std::size_t n, std::uint64_t m);
/// prod_d (prod_k (1 - q^(dk)))^r_d to n terms, i.e. an eta quotient without its q^(lead/24).
ModVec mod_eta_product(const std::vector<std::pair<int, int>>& factors, std::size_t n, std::uint64_t m);

/// Coefficients a_j(n) mod p^k of F_j = sum a_j(n) q^(n/6) for 0 <= n <= max_index.
class FamilyMod {
 public:
  FamilyMod(std::uint64_t p, unsigned k, std::int64_t max_index, std::initializer_list<int> which = {1, 2, 3, 4, 5});

  const PrimePower& prime_power() const { return pk_; }
  std::int64_t max_index() const { return max_index_; }
  bool has(int j) const { return j >= 1 && j <= 5 && !inner_[j - 1].empty(); }

  /// Throws kInsufficientPrecision past max_index and kInvalidArgument for a form not built.
  std::uint64_t coefficient(int j, std::int64_t n) const;

 private:
  PrimePower pk_;
  std::int64_t max_index_;
  std::array<ModVec, 5> inner_;
};

}  // namespace qmasd
