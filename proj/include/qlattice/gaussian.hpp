#pragma once

#include "qlattice/errors.hpp"
#include "qlattice/numeric.hpp"

namespace qlat {

/// [n]_q = (q^n - 1)/(q - 1) = q^{n-1} + ... + q + 1.
Int q_bracket(int n, int q);

/// [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.
Int q_factorial(int n, int q);

/// Gaussian binomial coefficient: the number of k-dimensional subspaces of
/// (F_q)^n. Throws domain_error unless 0 <= k <= n.
Int gaussian(int n, int k, int q);

}  // namespace qlat
