#pragma once

namespace tslab {

/// Regularized incomplete beta function I_x(a, b), evaluated by the
/// continued-fraction expansion with the symmetry switch at
/// x = (a+1)/(a+b+2). Absolute accuracy around 1e-13 for the argument
/// ranges the t distribution needs.
double regularized_incomplete_beta(double a, double b, double x);

/// Upper-tail probability P(T_df > t) of the Student-t distribution:
/// for t >= 0, sf = I_{df/(df+t^2)}(df/2, 1/2) / 2, and sf(-t) = 1 - sf(t).
/// errors: df < 1 -> invalid_df.
double student_t_sf(double t, int df);

}  // namespace tslab
