#include "sampling.hpp"

namespace nct {

Mat<Scalar> random_int_matrix(Rng& rng, int d, long bound) {
  Mat<Scalar> m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = Scalar(rng.uniform(-bound, bound));
  return m;
}

Mat<Scalar> random_gaussian_matrix(Rng& rng, int d, long bound) {
  Mat<Scalar> m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      mpq_class re(rng.uniform(-bound, bound));
      mpq_class im(rng.uniform(-bound, bound));
      m.at(i, j) = Scalar::gaussian(re, im);
    }
  return m;
}

} // namespace nct
