#pragma once

// Floating-point values of the sine-product units v_pq and u_pq. Nothing in
// the group, representation or L-function code depends on these.

#include "qcyclo/group.hpp"

namespace qcyclo {

/// sin[a] = 2 sin(pi a) for a = num/den reduced into [0, 1), sin[0] = 1.
/// Throws DomainError unless 0 <= num/den < 1 and den > 0.
long double sin_bracket(i64 num, i64 den);

enum class Precision { double_precision, extended };
int precision_bits(Precision p);

/// Order in which the finite double product is accumulated.
enum class ProductOrder {
  rows,      // i outer, j inner
  columns,   // j outer, i inner
  reversed,  // rows, both indices descending
  log_sum,   // exp of a sum of logarithms
};

/// v_pq for odd primes p < q.
long double v_product(i64 p, i64 q, Precision precision = Precision::extended,
                      ProductOrder order = ProductOrder::rows);

/// v_2q with the stray index in the numerator-free factor read as 4j+1.
long double v_two_product(i64 q, Precision precision = Precision::extended,
                          ProductOrder order = ProductOrder::rows);

struct UnitValue {
  long double real_part = 0;
  long double imag_part = 0;
  int precision_bits = 0;
};

/// u_pq: sqrt(q*) for p = -1, v_pq times the square-root prefactor for odd
/// p, and v_2q for p = 2 only when p2_interpretation is set.
UnitValue eval_unit(const FieldParams& params, Precision precision = Precision::extended,
                    bool p2_interpretation = false);

}  // namespace qcyclo
