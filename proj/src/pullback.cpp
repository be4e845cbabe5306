#include "ncmorse/errors.hpp"
#include "ncmorse/nccw.hpp"

namespace ncmorse {

PullbackResult pullback_dimension(const IntegerMatrix& alpha1, const IntegerMatrix& alpha2) {
  if (alpha1.rows() != alpha2.rows())
    throw_invalid_input("pullback maps have different codomains (" + std::to_string(alpha1.rows()) + " vs " +
                        std::to_string(alpha2.rows()) + " rows)");
  IntegerMatrix stacked(alpha1.rows(), alpha1.cols() + alpha2.cols());
  for (std::size_t i = 0; i < alpha1.rows(); ++i) {
    for (std::size_t j = 0; j < alpha1.cols(); ++j) stacked(i, j) = alpha1(i, j);
    for (std::size_t j = 0; j < alpha2.cols(); ++j) stacked(i, alpha1.cols() + j) = -alpha2(i, j);
  }
  PullbackResult out;
  out.basis = rational_kernel(stacked);
  out.dimension = out.basis.size();
  return out;
}

}  // namespace ncmorse
