"""Signed, group-element-weighted intersection points and surgery on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence

from .algebra import GroupElem, LaurentPoly, ParseError


class IdentityMeridian(ValueError):
    pass


@dataclass(frozen=True, order=True)
class IntersectionRecord:
    sign: int
    elem: GroupElem

    def __post_init__(self):
        if self.sign not in (1, -1) or isinstance(self.sign, bool):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if not isinstance(self.elem, GroupElem):
            object.__setattr__(self, "elem", GroupElem(self.elem))

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'} {self.elem.n}"


@dataclass(frozen=True)
class SurgeryConfig:
    """Class g of the dual circle; ``inverse_dual`` uses g^-1 instead.

    The flag switches between the two conventions for reading the dual arc
    (forward or reversed); either way the surgered sum is (1 - g') times the
    disk's sum, with g' the element actually used.
    """

    dual_elem: GroupElem
    inverse_dual: bool = False

    @property
    def effective(self) -> GroupElem:
        return self.dual_elem.inverse() if self.inverse_dual else self.dual_elem


def lambda_sum(points: Iterable[IntersectionRecord]) -> LaurentPoly:
    acc = {}
    for p in points:
        acc[p.elem.n] = acc.get(p.elem.n, 0) + p.sign
    return LaurentPoly(acc)


def relative_elem(x: IntersectionRecord, y: IntersectionRecord) -> GroupElem:
    """The element lambda_x * lambda_y^-1 relating two intersection points."""
    return x.elem * y.elem.inverse()


def surgery_pushoff(
    d_points: Sequence[IntersectionRecord], cfg: SurgeryConfig
) -> List[IntersectionRecord]:
    """Replace each disk intersection by itself and its oppositely signed pushoff."""
    g = cfg.effective
    out = []
    for p in d_points:
        out.append(p)
        out.append(IntersectionRecord(-p.sign, g * p.elem))
    return out


def realize(q: LaurentPoly) -> List[IntersectionRecord]:
    """One unit-signed record per unit of each coefficient of q."""
    out = []
    for n, c in q.items():
        sign = 1 if c > 0 else -1
        out.extend(IntersectionRecord(sign, GroupElem(n)) for _ in range(abs(c)))
    return out


def basis_sphere_lambda(q: LaurentPoly, meridian: GroupElem) -> List[IntersectionRecord]:
    """Intersections of the plus sphere with a surgered basis sphere.

    Two successive surgeries, each along a circle dual to a meridian, turn the
    records of q into records whose sum is (1 - meridian)^2 q.  With
    meridian = s, ``extract_q`` of that sum gives back q and q(1).
    """
    if meridian.is_identity:
        raise IdentityMeridian("meridian must be a nontrivial group element")
    cfg = SurgeryConfig(meridian)
    return surgery_pushoff(surgery_pushoff(realize(q), cfg), cfg)


def format_records(points: Iterable[IntersectionRecord]) -> str:
    return "".join(f"{p}\n" for p in points)


def parse_records(text: str) -> List[IntersectionRecord]:
    """Parse ``+ n`` / ``- n`` lines; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0] not in ("+", "-"):
            raise ParseError(f"line {lineno}: expected '+ n' or '- n', got {raw!r}")
        try:
            n = int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: bad exponent {parts[1]!r}") from None
        out.append(IntersectionRecord(1 if parts[0] == "+" else -1, GroupElem(n)))
    return out
