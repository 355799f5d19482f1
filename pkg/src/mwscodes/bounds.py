"""Bound formulas for shortest MWS / QM code lengths.

Everything that feeds a pass/fail comparison is exact: length bounds use
integer ceilings and the random-coding threshold uses arbitrary-precision
rationals.  Real-valued quantities (entropy, the two GV-type length factors)
are returned as floats; the factor lambda_q is evaluated in high-precision
arithmetic internally because 1 - h_q((q-2)/(q-1)) underflows double
precision already around q = 10^4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict
from fractions import Fraction

import mpmath


def entropy_q(q: int, x: float) -> float:
    """The q-ary entropy -x log_q x - (1-x) log_q(1-x) + x log_q(q-1).

    Uses the 0 log 0 = 0 convention at both endpoints.
    """
    if q < 2:
        raise ValueError("entropy base must be >= 2")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"entropy argument {x} outside [0, 1]")
    lq = math.log(q)
    h = 0.0
    if 0.0 < x:
        h -= x * math.log(x) / lq
    if x < 1.0:
        h -= (1.0 - x) * math.log(1.0 - x) / lq
    h += x * math.log(q - 1) / lq
    return h


def lambda_q(q: int) -> float:
    """GV-type length factor (1 - h_q((q-2)/(q-1)))^{-1}.

    Grows like 2 q^3 ln q; equals 1 at q = 2.
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    if q == 2:
        return 1.0
    with mpmath.workdps(60):
        x = mpmath.mpf(q - 2) / (q - 1)
        lq = mpmath.log(q)
        h = (-x * mpmath.log(x) - (1 - x) * mpmath.log(1 - x) + x * mpmath.log(q - 1)) / lq
        return float(1 / (1 - h))


def mu_q(q: int) -> float:
    """Non-constructive length factor 2 / log_q(q^2 / (q^2 - 2q + 2)).

    Grows like q ln q, i.e. about 2 q^2 smaller than lambda_q.
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    denom = math.log1p((2 * q - 2) / (q * q - 2 * q + 2))
    return 2.0 * math.log(q) / denom


def mws_lower_bound(q: int, k: int) -> int:
    """ceil((q/2) (q^k - 1)/(q - 1)): no shorter [n,k]_q MWS code exists."""
    num = q * (q**k - 1)
    den = 2 * (q - 1)
    return -(-num // den)


def exact_mws_length(q: int, k: int) -> int | None:
    """The known exact shortest MWS lengths: 2^k - 1 for q = 2, and
    q(q+1)/2 for k = 2.  None when neither case applies."""
    if q == 2:
        return 2**k - 1
    if k == 2:
        return q * (q + 1) // 2
    return None


def binom_sq_sum(n: int, q: int) -> int:
    """sum_{w=0}^{n} C(n,w)^2 (q-1)^{2w}, exactly."""
    if n < 0:
        raise ValueError("n must be >= 0")
    s = (q - 1) ** 2
    return sum(math.comb(n, w) ** 2 * s**w for w in range(n + 1))


def max_term(n: int, q: int) -> tuple[int, int]:
    """The maximizer of C(n,w)(q-1)^w and its value M(n,q).

    The term ratio shows the sequence is nondecreasing exactly while
    w <= (q-1)(n+1)/q, so the floor of that expression attains the maximum
    (and is the index reported even under ties).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    w_max = (q - 1) * (n + 1) // q
    w_max = min(w_max, n)
    return w_max, math.comb(n, w_max) * (q - 1) ** w_max


def eqbound_value(q: int, k: int, n: int) -> Fraction:
    """The random-coding expectation bound q^{2k-2n} sum C(n,w)^2 (q-1)^{2w}
    as an exact rational."""
    return Fraction(q ** (2 * k) * binom_sq_sum(n, q), q ** (2 * n))


def _log_binom_sq_sum(n: int, q: int) -> float:
    """ln of binom_sq_sum(n, q) in floats.

    The squared terms form a sharply peaked sequence of width O(sqrt(n)), so
    summing relative to the peak converges after a few hundred terms and
    keeps the relative error near machine precision.
    """
    if n == 0:
        return 0.0
    w_max, _ = max_term(n, q)
    lq1 = math.log(q - 1) if q > 2 else 0.0

    def log_term(w):
        return (
            math.lgamma(n + 1) - math.lgamma(w + 1) - math.lgamma(n - w + 1) + w * lq1
        )

    peak = log_term(w_max)
    total = 0.0
    for direction in (-1, 1):
        w = w_max if direction == 1 else w_max - 1
        while 0 <= w <= n:
            rel = math.exp(2.0 * (log_term(w) - peak))
            total += rel
            if rel < 1e-22:
                break
            w += direction
    return 2.0 * peak + math.log(total)


def eqbound_min_n(q: int, k: int, max_n: int | None = None) -> int | None:
    """Smallest n with eqbound_value(q, k, n) < 2 (q-1)^2.

    Scans n upward from k.  A float evaluation of the left side (accurate to
    ~1e-9 in the log) settles each comparison when the margin allows; only
    near-boundary n fall back to the exact rational, so the verdict is always
    the exact one.  The left side eventually decays like 1/sqrt(n), so the
    scan terminates; max_n caps it for large (q, k) cells, returning None
    when the threshold was not reached within the cap.
    """
    threshold = 2 * (q - 1) ** 2
    log_threshold = math.log(threshold)
    lq = math.log(q)
    n = max(k, 1)
    while True:
        log_lhs = (2 * k - 2 * n) * lq + _log_binom_sq_sum(n, q)
        delta = log_lhs - log_threshold
        if delta < -1e-6 or (abs(delta) <= 1e-6 and eqbound_value(q, k, n) < threshold):
            return n
        n += 1
        if max_n is not None and n > max_n:
            return None


@dataclass(frozen=True)
class BoundsReport:
    """All length bounds and asymptotic diagnostics for one (q, k) cell."""

    q: int
    k: int
    lower_bound_length: int
    exact_length: int | None
    lambda_q: float
    mu_q: float
    gv_qm_length: int
    nonconstructive_qm_length: int
    embedded_length_gv: int
    embedded_length_simplex: int
    eqbound_min_n: int | None
    lambda_ratio: float
    mu_ratio: float
    lambda_over_mu_ratio: float
    limit_bracket: tuple[int, int]
    d_q_estimate: float
    d_q_note: str

    def to_dict(self) -> dict:
        d = asdict(self)
        d["limit_bracket"] = list(self.limit_bracket)
        return d


def bounds_report(q: int, k: int, eqbound_cap: int = 2000) -> BoundsReport:
    """Assemble every bound for one (q, k) cell.

    eqbound_cap limits the exact threshold scan; cells whose threshold lies
    beyond the cap report None there.  The D_q figure is an asymptotic
    estimate only and never feeds a comparison.
    """
    lam = lambda_q(q)
    mu = mu_q(q)
    gv_len = math.ceil(k * lam)
    simplex_len = (q**k - 1) // (q - 1)
    return BoundsReport(
        q=q,
        k=k,
        lower_bound_length=mws_lower_bound(q, k),
        exact_length=exact_mws_length(q, k),
        lambda_q=lam,
        mu_q=mu,
        gv_qm_length=gv_len,
        nonconstructive_qm_length=math.ceil(k * mu),
        embedded_length_gv=2**gv_len,
        embedded_length_simplex=2 ** (simplex_len - 1),
        eqbound_min_n=eqbound_min_n(q, k, max_n=eqbound_cap),
        lambda_ratio=lam / (2 * q**3 * math.log(q)),
        mu_ratio=mu / (q * math.log(q)),
        lambda_over_mu_ratio=(lam / mu) / (2 * q**2),
        limit_bracket=(1, 4),
        d_q_estimate=q / (2 * (q - 1) ** 2.5),
        d_q_note="approximate asymptotic estimate; not used in any comparison",
    )
