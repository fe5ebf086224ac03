"""Exact sparse Laurent polynomials over Z in one variable (s) and two (s, t).

``LaurentPoly`` models Z[s, s^-1] and ``BiLaurent`` models Z[s^±1, t^±1],
where the monomial s^n t^m stands for the pair (s^n, s^m) of group elements.
Both are immutable, keep no zero coefficients, and iterate their terms in
increasing exponent order.

Exponents are machine integers: any exponent leaving the signed 64-bit range
raises ``ExponentOverflow``.  Coefficients are unbounded Python ints.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Tuple, Union

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class ExponentOverflow(ArithmeticError):
    pass


class ParseError(ValueError):
    pass


class NotDivisible(ArithmeticError):
    """Raised when a polynomial is not an exact multiple of (1 - s).

    ``remainder`` is the polynomial r with ``p = (1 - s)*q + r`` where r is a
    single term sitting at the top exponent of p; its coefficient is the
    augmentation of p.
    """

    def __init__(self, dividend: "LaurentPoly", remainder: "LaurentPoly", stage: int = 1):
        self.dividend = dividend
        self.remainder = remainder
        self.stage = stage
        super().__init__(
            f"{dividend} is not divisible by (1 - s) (stage {stage}, remainder {remainder})"
        )


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def checked_exp(x: int) -> int:
    if not INT64_MIN <= x <= INT64_MAX:
        raise ExponentOverflow(f"exponent {x} outside signed 64-bit range")
    return x


@dataclass(frozen=True, order=True)
class GroupElem:
    """The element s^n of the infinite cyclic group <s>."""

    n: int = 0

    def __post_init__(self):
        if not _is_int(self.n):
            raise TypeError(f"group element exponent must be an int, got {self.n!r}")
        checked_exp(self.n)

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        return GroupElem(checked_exp(self.n + other.n))

    def inverse(self) -> "GroupElem":
        return GroupElem(checked_exp(-self.n))

    @property
    def is_identity(self) -> bool:
        return self.n == 0

    def __str__(self) -> str:
        return f"s^{self.n}"



class _SparsePoly:
    """Shared machinery; subclasses fix the key shape and the text form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for key, coeff in (terms or {}).items():
            self._check_key(key)
            if not _is_int(coeff):
                raise TypeError(f"coefficient must be an int, got {coeff!r}")
            if coeff:
                clean[key] = coeff
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _from_accumulator(cls, acc: Dict):
        # acc may hold zeros; keys already validated
        out = cls.__new__(cls)
        out._terms = {k: c for k, c in sorted(acc.items()) if c}
        out._hash = None
        return out

    @staticmethod
    def _check_key(key) -> None:
        raise NotImplementedError

    @staticmethod
    def _key_add(a, b):
        raise NotImplementedError

    @property
    def terms(self) -> Dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, key) -> int:
        return self._terms.get(key, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, type(self)):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(self._terms.items())))
        return self._hash

    def __add__(self, other):
        if _is_int(other):
            other = type(self).constant(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return type(self)._from_accumulator(acc)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._from_accumulator({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if _is_int(other):
            other = type(self).constant(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_int(other):
            return type(self)._from_accumulator({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, type(self)):
            return NotImplemented
        acc: Dict = {}
        key_add = self._key_add
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = key_add(k1, k2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return type(self)._from_accumulator(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not _is_int(k) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = type(self).constant(1)
        for _ in range(k):
            out = out * self
        return out

    def augment(self) -> int:
        """Image under the augmentation map (every group element to 1)."""
        return sum(self._terms.values())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

    @classmethod
    def constant(cls, c: int):
        raise NotImplementedError


class LaurentPoly(_SparsePoly):
    """Element of Z[s, s^-1], stored as {exponent: coefficient}."""

    __slots__ = ()

    @staticmethod
    def _check_key(key) -> None:
        if not _is_int(key):
            raise TypeError(f"exponent must be an int, got {key!r}")
        checked_exp(key)

    @staticmethod
    def _key_add(a: int, b: int) -> int:
        return checked_exp(a + b)

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, n: int, coeff: int = 1) -> "LaurentPoly":
        return cls({n: coeff})

    @classmethod
    def from_elem(cls, g: GroupElem, coeff: int = 1) -> "LaurentPoly":
        return cls({g.n: coeff})

    def min_exp(self) -> int:
        return next(iter(self._terms))

    def max_exp(self) -> int:
        return next(reversed(self._terms))

    def __str__(self) -> str:
        return _format_terms((_term_body(c, f"s^{n}") for n, c in self._terms.items()))

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        acc: Dict[int, int] = {}
        for coeff, n, m in _parse_terms(text):
            if m is not None:
                raise ParseError(f"unexpected t in one-variable polynomial: {text!r}")
            acc[n] = acc.get(n, 0) + coeff
        return cls(acc)


class BiLaurent(_SparsePoly):
    """Element of Z[s^±1, t^±1], stored as {(n, m): coefficient} for s^n t^m."""

    __slots__ = ()

    @staticmethod
    def _check_key(key) -> None:
        if not (isinstance(key, tuple) and len(key) == 2 and all(_is_int(e) for e in key)):
            raise TypeError(f"exponent must be an (int, int) pair, got {key!r}")
        checked_exp(key[0])
        checked_exp(key[1])

    @staticmethod
    def _key_add(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
        return checked_exp(a[0] + b[0]), checked_exp(a[1] + b[1])

    @classmethod
    def constant(cls, c: int) -> "BiLaurent":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, n: int, m: int, coeff: int = 1) -> "BiLaurent":
        return cls({(n, m): coeff})

    def __str__(self) -> str:
        return _format_terms(_term_body(c, f"s^{n}*t^{m}") for (n, m), c in self._terms.items())

    @classmethod
    def parse(cls, text: str) -> "BiLaurent":
        acc: Dict[Tuple[int, int], int] = {}
        for coeff, n, m in _parse_terms(text):
            key = (n, 0 if m is None else m)
            acc[key] = acc.get(key, 0) + coeff
        return cls(acc)


def _term_body(coeff: int, mono: str) -> str:
    if coeff == 1:
        return mono
    if coeff == -1:
        return "-" + mono
    return f"{coeff}*{mono}"


def _format_terms(bodies) -> str:
    out = ""
    for body in bodies:
        if not out:
            out = body
        elif body.startswith("-"):
            out += " - " + body[1:]
        else:
            out += " + " + body
    return out or "0"


_SPLIT = re.compile(r"(?<!\^)([+-])")
_FACTOR = re.compile(r"^(?:(?P<int>\d+)|(?P<var>[st])(?:\^(?P<exp>[+-]?\d+))?)$")


def _parse_terms(text: str):
    """Yield (coeff, s_exp, t_exp or None) for each term of a polynomial string.

    Accepts the canonical output form plus the obvious shorthands
    (``s``, ``t^3``, ``2``, ``3*t``).  ``t_exp`` is None when no t factor
    is present.
    """
    src = text.replace(" ", "").replace("\t", "")
    if not src:
        raise ParseError("empty polynomial string")
    pieces = _SPLIT.split(src)
    # pieces: [lead, sign, body, sign, body, ...]
    terms = []
    if pieces[0]:
        terms.append(("+", pieces[0]))
    elif len(pieces) == 1:
        raise ParseError(f"empty polynomial string {text!r}")
    for i in range(1, len(pieces), 2):
        terms.append((pieces[i], pieces[i + 1]))
    for sign, body in terms:
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = None
        exps: Dict[str, int] = {}
        for j, factor in enumerate(body.split("*")):
            mt = _FACTOR.match(factor)
            if mt is None:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            if mt.group("int") is not None:
                if j != 0:
                    raise ParseError(f"coefficient must lead its term in {text!r}")
                coeff = int(mt.group("int"))
            else:
                var = mt.group("var")
                if var in exps:
                    raise ParseError(f"repeated variable {var!r} in {text!r}")
                exps[var] = checked_exp(int(mt.group("exp") or 1))
        if "t" in exps and list(exps) == ["t", "s"]:
            raise ParseError(f"s must precede t in {text!r}")
        value = 1 if coeff is None else coeff
        if sign == "-":
            value = -value
        yield value, exps.get("s", 0), exps.get("t")


def augment(p: Union[LaurentPoly, BiLaurent]) -> int:
    """Sum of coefficients: the image of p under s, t -> 1."""
    return p.augment()


ONE_MINUS_S = LaurentPoly({0: 1, 1: -1})


def divide_exact_one_minus_s(p: LaurentPoly, *, stage: int = 1) -> LaurentPoly:
    """Return q with (1 - s)*q == p, by synthetic division from the bottom.

    Writing p = sum p_k s^k, the quotient coefficients are the running sums
    q_k = p_L + ... + p_k for k from the lowest exponent L to top - 1; the
    division is exact iff the full sum (the augmentation) vanishes.
    """
    if not p:
        return LaurentPoly()
    lo, hi = p.min_exp(), p.max_exp()
    q: Dict[int, int] = {}
    running = 0
    for k in range(lo, hi):
        running += p.coeff(k)
        if running:
            q[k] = running
    remainder = running + p.coeff(hi)
    if remainder:
        raise NotDivisible(p, LaurentPoly({hi: remainder}), stage=stage)
    return LaurentPoly._from_accumulator(q)


def extract_q(p: LaurentPoly) -> Tuple[LaurentPoly, int]:
    """Split p = (1 - s)^2 * q; return q and its augmentation q(1)."""
    q1 = divide_exact_one_minus_s(p, stage=1)
    q = divide_exact_one_minus_s(q1, stage=2)
    return q, q.augment()
