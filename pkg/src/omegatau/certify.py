"""Constructive certificates for s^n t^m == t^((n+nm+m) mod 2) in the quotient.

The construction is a fixed recursion, no search:

* 2t^k is the single relation T2(0, k).
* t^(k+2) - t^k = T4(0,k) + T2(0,k+1) - T2(0,k); chaining these gives
  t^m == t^(m mod 2).
* s - t = T3(1,0) - T2(0,1) and st - t = T1(1) + (s - t) seed the family
  s t^m == t, which is then extended in m by the three-term recurrence
  below.
* For general n: s^n - t^(n mod 2) comes from T3(n,0) plus the t^m chain,
  and s^n t - t from T3(n,1) plus the s t^m family.  From those two seeds
  the recurrence

      s^n t^(k+1) = T4(n,k-1) + 2 s^n t^k - s^n t^(k-1)     (upwards)
      s^n t^(k-1) = T4(n,k-1) + 2 s^n t^k - s^n t^(k+1)     (downwards)

  reaches every m; a T2(0, .) correction fixes up the right-hand normal
  forms when n is even (they alternate with m).
"""

from __future__ import annotations

from typing import Dict

from .algebra import ExponentOverflow
from .quotient import NFCertificate, RelationInstance, parity_exponent

DEFAULT_CERT_RANGE = 256

Combo = Dict[RelationInstance, int]


class RangeExceeded(ValueError):
    pass


def _lin(*parts) -> Combo:
    """Integer linear combination of combos given as (coeff, combo) pairs."""
    out: Combo = {}
    for coeff, combo in parts:
        if not coeff:
            continue
        for inst, c in combo.items():
            out[inst] = out.get(inst, 0) + coeff * c
    return {inst: c for inst, c in out.items() if c}


def _inst(kind: str, n: int, m: int = 0) -> Combo:
    return {RelationInstance(kind, n, m): 1}


def _two_t(k: int) -> Combo:
    # T2(0,k) = t^k + t^k
    return _inst("T2", 0, k)


def _t_shift(k: int) -> Combo:
    # t^(k+2) - t^k
    return _lin((1, _inst("T4", 0, k)), (1, _two_t(k + 1)), (-1, _two_t(k)))


def _cert_t(m: int) -> Combo:
    """t^m - t^(m mod 2)."""
    b = m & 1
    if m >= b:
        return _lin(*((1, _t_shift(k)) for k in range(b, m - 1, 2)))
    return _lin(*((-1, _t_shift(k)) for k in range(m, b - 1, 2)))


def _correction(n: int, k: int) -> Combo:
    """Proof of 2 t^b(k) - t^b(k-1) - t^b(k+1), where b(j) = parity of s^n t^j."""
    if n & 1:
        return {}
    bk = parity_exponent(n, k)
    return _lin((1, _two_t(bk)), (-1, _two_t(bk ^ 1)))


def _climb(n: int, c0: Combo, c1: Combo, m: int) -> Combo:
    """Extend proofs for s^n t^0 and s^n t^1 to s^n t^m."""
    if m == 0:
        return c0
    if m == 1:
        return c1
    if m > 1:
        prev, cur = c0, c1
        for k in range(1, m):
            nxt = _lin((1, _inst("T4", n, k - 1)), (2, cur), (-1, prev), (1, _correction(n, k)))
            prev, cur = cur, nxt
        return cur
    # m < 0: walk down from (s^n t^1, s^n t^0)
    above, cur = c1, c0
    for k in range(0, m, -1):
        nxt = _lin((1, _inst("T4", n, k - 1)), (2, cur), (-1, above), (1, _correction(n, k)))
        above, cur = cur, nxt
    return cur


def _cert_st(m: int) -> Combo:
    """s t^m - t."""
    s_minus_t = _lin((1, _inst("T3", 1, 0)), (-1, _two_t(1)))
    st_minus_t = _lin((1, _inst("T1", 1)), (1, s_minus_t))
    return _climb(1, s_minus_t, st_minus_t, m)


def _cert(n: int, m: int) -> Combo:
    if n == 0:
        return _cert_t(m)
    if n == 1:
        return _cert_st(m)
    # s^n - t^(n mod 2) via s^n == -t^n
    c0 = _lin((1, _inst("T3", n, 0)), (-1, _cert_t(n)), (-1, _two_t(n & 1)))
    # s^n t - t via s^n t == -s t^n
    c1 = _lin((1, _inst("T3", n, 1)), (-1, _cert_st(n)), (-1, _two_t(1)))
    return _climb(n, c0, c1, m)


def certify_nf(n: int, m: int, limit: int = DEFAULT_CERT_RANGE) -> NFCertificate:
    """Build the certificate for s^n t^m; |n| and |m| must not exceed ``limit``."""
    if abs(n) > limit or abs(m) > limit:
        raise RangeExceeded(f"({n}, {m}) outside certification range [-{limit}, {limit}]")
    combo = _cert(n, m)
    return NFCertificate(
        target=(n, m),
        nf_bit=parity_exponent(n, m),
        combo=tuple((c, inst) for inst, c in sorted(combo.items())),
    )


def verify_certificate(cert: NFCertificate) -> int:
    """1 if the combination expands to exactly s^n t^m - t^nf_bit, else 0."""
    if cert.nf_bit not in (0, 1):
        return 0
    try:
        return int(cert.combination() == cert.claimed())
    except ExponentOverflow:
        return 0
