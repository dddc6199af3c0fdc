// Copyright (c) 2026 The atlas developers.
// This file is part of atlas, released under the Apache License 2.0.

#pragma once

namespace atlas::stats {

/// Regularized incomplete beta I_x(a,b), evaluated by Lentz's continued
/// fraction with the usual symmetry switch at x = (a+1)/(a+b+2).
/// Converges to ~1e-14 relative; callers rely on 1e-10.
double incomplete_beta(double a, double b, double x);

/// Regularized lower incomplete gamma P(a,x) (series for x < a+1,
/// continued fraction otherwise).
double incomplete_gamma_p(double a, double x);
inline double incomplete_gamma_q(double a, double x) { return 1.0 - incomplete_gamma_p(a, x); }

/// P(T <= t) for Student's t with `dof` degrees of freedom.
double student_t_cdf(double t, double dof);

/// Two-sided p-value P(|T| >= |t|).
double student_t_two_sided_p(double t, double dof);

/// Survival function P(X >= x) for the chi-square distribution.
double chi_square_sf(double x, double dof);

} // namespace atlas::stats
