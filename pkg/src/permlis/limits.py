"""Numerical evaluation of the three limiting CDFs of normalized LIS lengths.

For n-letter avoiders with n large, the LIS length concentrates and its
normalized fluctuation converges in distribution:

* (231)/(312) family: normal fluctuation around (n+1)/2.
* (132)/(213) family: theta_cdf, the ordered-tree height law
      F(theta) = sum_t (1 - 2 t^2 c^2) exp(-c^2 t^2),   c = theta + sqrt(pi),
  defined for theta > -sqrt(pi); equivalently Theta(u) + 2u Theta'(u) with
  Theta the Jacobi theta function sum_t exp(-pi t^2 x) and u = (1+theta/sqrt(pi))^2.
* (321) family: gamma321_cdf, the regularized lower incomplete gamma
      F(t) = gamma(3/2, 4 t^2) / Gamma(3/2)   (lower: integral from 0 to 4t^2),
  which is also the chi-square CDF with three degrees of freedom at 8 t^2.

Everything is 64-bit floating point with absolute error at or below 1e-12 on
the supported domains.  Note the incomplete-gamma convention above is the
*lower* integral, the opposite of the Gamma(z, w) upper-tail convention used
by some references.
"""

from __future__ import annotations

import math

SQRT_PI = math.sqrt(math.pi)

_TRUNCATION_EPS = 1e-16
#: Below this value of c = theta + sqrt(pi), the direct theta series needs
#: the modular-transformed representation to keep absolute accuracy.
_THETA_SWITCH = 0.5


def normal_cdf(x: float) -> float:
    """Standard normal CDF, accurate to well below 1e-12 absolute.

    >>> normal_cdf(0.0)
    0.5
    """
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def _theta_direct(c: float) -> float:
    # 1 + 2 sum_{t>=1} (1 - 2 t^2 c^2) exp(-c^2 t^2); stop once the term
    # bound (1 + 2 t^2 c^2) exp(-c^2 t^2) drops below 1e-16.
    c2 = c * c
    total = 1.0
    t = 1
    while True:
        e = math.exp(-c2 * t * t)
        if (1.0 + 2.0 * t * t * c2) * e < _TRUNCATION_EPS:
            return total
        total += 2.0 * (1.0 - 2.0 * t * t * c2) * e
        t += 1


def _theta_transformed(c: float) -> float:
    # Poisson summation turns the series into
    #   F = 4 pi u^{-3/2} sum_{t>=1} t^2 exp(-pi t^2 / u),   u = c^2 / pi,
    # whose leading cancellation has been performed exactly; ideal for small c.
    u = c * c / math.pi
    coef = 4.0 * math.pi * u**-1.5
    x = math.pi / u
    total = 0.0
    t = 1
    while True:
        arg = x * t * t
        term = coef * t * t * math.exp(-arg) if arg < 745.0 else 0.0
        if term < 1e-17:
            return total
        total += term
        t += 1


def theta_cdf(theta: float) -> float:
    """Limit CDF of (LIS - sqrt(pi n)) / sqrt(n) on the (132)/(213) family.

    Equals the limiting distribution of ordered-tree height / sqrt(n).
    Domain: theta > -sqrt(pi).
    """
    if theta <= -SQRT_PI:
        raise ValueError(f"theta must exceed -sqrt(pi) = {-SQRT_PI}")
    c = theta + SQRT_PI
    if c < _THETA_SWITCH:
        return _theta_transformed(c)
    return _theta_direct(c)


def jacobi_theta(x: float) -> float:
    """Theta(x) = sum over all integers t of exp(-pi t^2 x), for x > 0."""
    if x <= 0:
        raise ValueError("x must be positive")
    total = 1.0
    t = 1
    while True:
        e = math.exp(-math.pi * t * t * x)
        if e < 1e-18:
            return total
        total += 2.0 * e
        t += 1


def jacobi_theta_deriv(x: float) -> float:
    """d/dx of :func:`jacobi_theta`: -2 pi sum_{t>=1} t^2 exp(-pi t^2 x)."""
    if x <= 0:
        raise ValueError("x must be positive")
    total = 0.0
    t = 1
    while True:
        term = 2.0 * math.pi * t * t * math.exp(-math.pi * t * t * x)
        if term < 1e-18:
            return -total
        total += term
        t += 1


def theta_cdf_via_jacobi(theta: float) -> float:
    """Evaluate the theta law through the identity F = Theta(u) + 2u Theta'(u).

    Here u = (1 + theta/sqrt(pi))^2.  This is the plain two-series route,
    kept independent of :func:`theta_cdf` as an executable cross-check; the
    two agree to 1e-12 for theta >= -sqrt(pi) + 0.05 (nearer the left edge
    the cancellation between the two terms slowly costs digits).
    """
    if theta <= -SQRT_PI:
        raise ValueError(f"theta must exceed -sqrt(pi) = {-SQRT_PI}")
    u = (1.0 + theta / SQRT_PI) ** 2
    return jacobi_theta(u) + 2.0 * u * jacobi_theta_deriv(u)


def _lower_gamma_series(a: float, x: float) -> float:
    # P(a, x) = x^a e^-x / Gamma(a) * sum_k x^k / (a (a+1) ... (a+k)), x < a+1
    term = 1.0 / a
    total = term
    k = a
    while True:
        k += 1.0
        term *= x / k
        total += term
        if abs(term) < abs(total) * 1e-17:
            return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _upper_gamma_cf(a: float, x: float) -> float:
    # Q(a, x) by modified Lentz continued fraction, x >= a+1
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    i = 1
    while True:
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-17:
            return h * math.exp(-x + a * math.log(x) - math.lgamma(a))
        i += 1


def regularized_lower_gamma(a: float, x: float) -> float:
    """P(a, x) = (integral of u^(a-1) e^-u from 0 to x) / Gamma(a).

    Series expansion for x < a+1, continued fraction for the complement
    otherwise: robust over x in [0, inf).
    """
    if a <= 0:
        raise ValueError("a must be positive")
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x == 0:
        return 0.0
    if x < a + 1.0:
        return _lower_gamma_series(a, x)
    return 1.0 - _upper_gamma_cf(a, x)


def gamma321_cdf(t: float) -> float:
    """Limit CDF of (LIS - n/2) / sqrt(n) on the (321) family, t >= 0.

    F(t) = (32/sqrt(pi)) * integral of x^2 exp(-4x^2) on [0, t]
         = gamma(3/2, 4 t^2) / Gamma(3/2)   (lower incomplete gamma),
    and equals the chi-square(3 dof) CDF evaluated at 8 t^2.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    return regularized_lower_gamma(1.5, 4.0 * t * t)


def chi2_3_cdf(x: float) -> float:
    """Chi-square CDF with three degrees of freedom, in closed form.

    P(chi2_3 <= x) = erf(sqrt(x/2)) - sqrt(2x/pi) exp(-x/2); an independent
    route to :func:`gamma321_cdf` via gamma321_cdf(t) == chi2_3_cdf(8 t^2).
    """
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x == 0:
        return 0.0
    return math.erf(math.sqrt(0.5 * x)) - math.sqrt(2.0 * x / math.pi) * math.exp(-0.5 * x)


def theta_law_stdev() -> float:
    """Standard deviation of the theta limit law: sqrt(pi (pi/3 - 1)) = 0.38506...

    The (132)/(213) LIS standard deviation grows like this constant times
    sqrt(n).
    """
    return math.sqrt(math.pi * (math.pi / 3.0 - 1.0))


def theta_series_term(n: int, t: int, c: float) -> float:
    """Finite-n term whose limit is (1 - 2 c^2 t^2) exp(-c^2 t^2).

    Evaluates
        (n+1) * C(2n, n + t c sqrt(n)) / C(2n, n)
              * ((n+1) - 2 t^2 c^2 n) / ((n+1)^2 - t^2 c^2 n)
    with the binomial taken at its real-valued index through the gamma
    function (no rounding, so the error decreases smoothly in n).  Terms
    whose index falls outside [0, 2n] are zero, matching the out-of-range
    binomial convention.
    """
    if n < 1:
        raise ValueError("n must be positive")
    x = t * c * math.sqrt(n)
    if abs(x) > n:
        return 0.0
    if x == 0.0:
        ratio = 1.0
    else:
        # C(2n, n+x) / C(2n, n) = Gamma(n+1)^2 / (Gamma(n+x+1) Gamma(n-x+1))
        ratio = math.exp(
            2.0 * math.lgamma(n + 1.0) - math.lgamma(n + x + 1.0) - math.lgamma(n - x + 1.0)
        )
    a = (t * c) ** 2 * n
    poly = (n + 1.0) * ((n + 1.0) - 2.0 * a) / ((n + 1.0) ** 2 - a)
    return ratio * poly
