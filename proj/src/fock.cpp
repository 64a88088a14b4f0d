#include "polyosc/fock.hpp"

#include <stdexcept>
#include <string>

namespace polyosc {

FockBasis::FockBasis(int n1_max, int n2_max)
    : n1_max_(n1_max), n2_max_(n2_max) {
  if (n1_max < 1 || n2_max < 1)
    throw std::invalid_argument("mode cutoffs must be >= 1");
  const std::int64_t dim =
      (static_cast<std::int64_t>(n1_max) + 1) *
      (static_cast<std::int64_t>(n2_max) + 1);
  if (dim > kDimensionCap)
    throw Error(Errc::SizeOverflow,
                "basis dimension " + std::to_string(dim) + " exceeds cap " +
                    std::to_string(kDimensionCap));
}

FockBasis build_basis(int n1_max, int n2_max) {
  return FockBasis(n1_max, n2_max);
}

std::vector<int> interior_mask(const FockBasis& basis, int margin1,
                               int margin2) {
  if (margin1 < 0 || margin2 < 0)
    throw std::invalid_argument("margins must be nonnegative");
  std::vector<int> mask;
  const int n1_hi = basis.n1_max() - margin1;
  const int n2_hi = basis.n2_max() - margin2;
  if (n1_hi >= 0 && n2_hi >= 0) {
    mask.reserve(static_cast<std::size_t>((n1_hi + 1) * (n2_hi + 1)));
    for (int n1 = 0; n1 <= n1_hi; ++n1)
      for (int n2 = 0; n2 <= n2_hi; ++n2) mask.push_back(basis.index(n1, n2));
  }
  if (mask.empty())
    throw Error(Errc::EmptyMask, "margins (" + std::to_string(margin1) + "," +
                                     std::to_string(margin2) +
                                     ") exhaust the basis");
  return mask;
}

Rational state_m(const SystemSpec& sys, int n1, int n2) {
  return Rational(n1, 2 * sys.l2) - Rational(n2, 2 * sys.l1);
}

Rational state_energy(const SystemSpec& sys, int n1, int n2) {
  return Rational(sys.l1 * (2 * n1 + 1), 2) +
         Rational(sys.l2 * (2 * n2 + 1), 2);
}

}  // namespace polyosc
