#include "qlattice/gaussian.hpp"

namespace qlat {

Int q_bracket(int n, int q) {
  if (n < 0) throw domain_error("q_bracket: n < 0");
  return (int_pow(q, n) - 1) / (q - 1);
}

Int q_factorial(int n, int q) {
  if (n < 0) throw domain_error("q_factorial: n < 0");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= q_bracket(i, q);
  return r;
}

Int gaussian(int n, int k, int q) {
  if (k < 0 || k > n)
    throw domain_error("gaussian(" + std::to_string(n) + "," + std::to_string(k) +
                       "): k outside [0,n]");
  // [n]_q! / ([k]_q! [n-k]_q!), exact division
  Int num = q_factorial(n, q);
  Int den = q_factorial(k, q) * q_factorial(n - k, q);
  return num / den;
}

}  // namespace qlat
