#include "qmasd/golden.hpp"

namespace qmasd {

namespace {

CycloNum radical(unsigned basis, long coeff) { return CycloNum::basis(basis, coeff); }

}  // namespace

const std::vector<GoldenRow>& golden_table() {
  // x^4 + c1 x^3 + c2 x^2 + c1 p^2 x + p^4, with A written as m*sqrt(-d).
  static const std::vector<GoldenRow> kRows = {
      {5, 0, 4, false, radical(CycloNum::kISqrt6, 3), -25},
      {7, 0, 10, false, radical(CycloNum::kISqrt3, 6), -49},
      {11, 0, -170, false, radical(CycloNum::kISqrt2, 6), -121},
      {13, 0, -230, false, radical(CycloNum::kISqrt3, 6), -169},
      {17, 0, -128, false, radical(CycloNum::kISqrt2, 15), -289},
      {19, 40, 1122, true, CycloNum(-20), 361},
      {23, 0, -842, false, radical(CycloNum::kISqrt6, -6), -529},
      {29, 0, -332, false, radical(CycloNum::kISqrt6, -15), -841},
  };
  return kRows;
}

const GoldenRow* golden_row(std::uint64_t p) {
  for (const auto& row : golden_table()) {
    if (row.p == p) return &row;
  }
  return nullptr;
}

}  // namespace qmasd
