"""The quotient ring Z[s^±1, t^±1] / (T1..T4) and its normal form.

The four relation families, for integers n, m, are

    T1(n)     s^n t^n - s^n
    T2(n, m)  s^n t^m + s^-n t^(m-n)
    T3(n, m)  s^n t^m + s^m t^n
    T4(n, m)  s^n t^m (1 - t)^2

and the quotient is Z/2<t : t^2 = 1>, with s^n t^m reducing to
t^((n + nm + m) mod 2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Tuple

from .algebra import BiLaurent, GroupElem, ParseError, checked_exp

KINDS = ("T1", "T2", "T3", "T4")


@dataclass(frozen=True)
class PiElement:
    """One of 0, 1, t, 1+t in Z/2<t : t^2 = 1>."""

    c1: int = 0
    ct: int = 0

    def __post_init__(self):
        if self.c1 not in (0, 1) or self.ct not in (0, 1):
            raise ValueError(f"PiElement coefficients must be bits, got ({self.c1}, {self.ct})")

    def __add__(self, other: "PiElement") -> "PiElement":
        return PiElement(self.c1 ^ other.c1, self.ct ^ other.ct)

    __sub__ = __add__

    def __bool__(self) -> bool:
        return bool(self.c1 or self.ct)

    @classmethod
    def t_power(cls, bit: int) -> "PiElement":
        return cls(0, 1) if bit & 1 else cls(1, 0)

    def __str__(self) -> str:
        return {(0, 0): "0", (1, 0): "1", (0, 1): "t", (1, 1): "1+t"}[(self.c1, self.ct)]

    @classmethod
    def parse(cls, text: str) -> "PiElement":
        table = {"0": (0, 0), "1": (1, 0), "t": (0, 1), "1+t": (1, 1), "t+1": (1, 1)}
        key = text.replace(" ", "")
        if key not in table:
            raise ParseError(f"not an element of Z/2<t>: {text!r}")
        return cls(*table[key])


ZERO = PiElement(0, 0)
ONE = PiElement(1, 0)
T = PiElement(0, 1)
ONE_PLUS_T = PiElement(1, 1)


def parity_exponent(n: int, m: int) -> int:
    """(n + n*m + m) mod 2, reduced before multiplying."""
    a, b = n & 1, m & 1
    return (a + a * b + b) & 1


@dataclass(frozen=True, order=True)
class RelationInstance:
    kind: str
    n: int
    m: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown relation kind {self.kind!r}")
        checked_exp(self.n)
        checked_exp(self.m)
        if self.kind == "T1" and self.m != 0:
            raise ValueError("T1 takes a single parameter; m must be 0")

    def expand(self) -> BiLaurent:
        return expand_relation(self)

    def __str__(self) -> str:
        return f"{self.kind}({self.n},{self.m})"

    @classmethod
    def parse(cls, text: str) -> "RelationInstance":
        mt = re.fullmatch(r"\s*(T[1-4])\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*", text)
        if mt is None:
            raise ParseError(f"bad relation instance {text!r}")
        return cls(mt.group(1), int(mt.group(2)), int(mt.group(3)))


def expand_relation(r: RelationInstance) -> BiLaurent:
    n, m = r.n, r.m
    if r.kind == "T1":
        terms = [((n, n), 1), ((n, 0), -1)]
    elif r.kind == "T2":
        terms = [((n, m), 1), ((checked_exp(-n), checked_exp(m - n)), 1)]
    elif r.kind == "T3":
        terms = [((n, m), 1), ((m, n), 1)]
    else:
        m1, m2 = checked_exp(m + 1), checked_exp(m + 2)
        terms = [((n, m), 1), ((n, m1), -2), ((n, m2), 1)]
    acc = {}
    for key, c in terms:
        acc[key] = acc.get(key, 0) + c
    return BiLaurent(acc)


def nf(p: BiLaurent) -> PiElement:
    """Normal form in Z/2<t>: c s^n t^m contributes (c mod 2) t^((n+nm+m) mod 2)."""
    c1 = ct = 0
    for (n, m), c in p.items():
        if c & 1:
            if parity_exponent(n, m):
                ct ^= 1
            else:
                c1 ^= 1
    return PiElement(c1, ct)


def rho(g: GroupElem) -> int:
    """Mod 2 Hurewicz image of s^n: the parity of n."""
    return g.n & 1


def phi(p: BiLaurent) -> PiElement:
    """The Z/2-linear map (a, b) -> t^(rho(a) + rho(a) rho(b) + rho(b)).

    Agrees with ``nf`` on every input; it is evaluated separately here, on
    pairs of group elements, and is only additive (not multiplicative).
    """
    out = ZERO
    for (n, m), c in p.items():
        if c % 2 == 0:
            continue
        a, b = rho(GroupElem(n)), rho(GroupElem(m))
        out = out + PiElement.t_power((a + a * b + b) % 2)
    return out


@dataclass(frozen=True)
class NFCertificate:
    """A proof that s^n t^m - t^nf_bit lies in the relation ideal.

    ``combo`` lists (coefficient, relation) pairs whose weighted expansions
    sum to exactly that difference.
    """

    target: Tuple[int, int]
    nf_bit: int
    combo: Tuple[Tuple[int, RelationInstance], ...] = ()

    def claimed(self) -> BiLaurent:
        n, m = self.target
        return BiLaurent({(n, m): 1}) - BiLaurent.monomial(0, self.nf_bit)

    def combination(self) -> BiLaurent:
        acc = BiLaurent()
        for coeff, inst in self.combo:
            acc = acc + coeff * expand_relation(inst)
        return acc

    def to_text(self) -> str:
        n, m = self.target
        lines = [f"target {n} {m} nf {self.nf_bit}"]
        lines += [f"{coeff} {inst}" for coeff, inst in self.combo]
        return "\n".join(lines) + "\n"


def parse_nf_certificate(text: str) -> NFCertificate:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty certificate")
    head = re.fullmatch(r"target\s+([+-]?\d+)\s+([+-]?\d+)\s+nf\s+([01])", lines[0])
    if head is None:
        raise ParseError(f"bad certificate header {lines[0]!r}")
    combo = []
    for ln in lines[1:]:
        mt = re.fullmatch(r"([+-]?\d+)\s+(\S.*)", ln)
        if mt is None:
            raise ParseError(f"bad certificate line {ln!r}")
        combo.append((int(mt.group(1)), RelationInstance.parse(mt.group(2))))
    return NFCertificate(
        target=(int(head.group(1)), int(head.group(2))),
        nf_bit=int(head.group(3)),
        combo=tuple(combo),
    )
