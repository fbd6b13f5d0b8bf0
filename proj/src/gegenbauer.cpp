#include "sharp/gegenbauer.hpp"

namespace sharp {

WeightMoment weight_moment(int k, int d) {
  if (k < 0 || d < 1) throw DomainError("weight_moment: need k >= 0 and d >= 1");
  if (k % 2 == 1) return {k, 0.0};
  double value = 1.0;
  for (int i = 0; i < k / 2; ++i) value *= (2.0 * i + 1.0) / (2.0 * i + 1.0 + d);
  return {k, value};
}

double weighted_integral(const Eigen::Ref<const Eigen::VectorXd>& monomial_coeffs, int d) {
  double sum = 0.0;
  for (Eigen::Index k = 0; k < monomial_coeffs.size(); k += 2)
    sum += monomial_coeffs(k) * weight_moment(static_cast<int>(k), d).value;
  return sum;
}

} // namespace sharp
