"""Whitney-disk certificates for good link maps and the invariants omega_+ and tau.

A certificate records, for each Whitney disk W_i pairing double points of
the plus sphere, the primary exponent n_i and the interior intersections x
with the plus sphere as (sign(x), m_x).  Boundary orientations are assumed
to follow the usual convention (from p_i^- to p_i^+ along the second arc);
nothing here can check that.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Tuple, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    StrictBool,
    StrictInt,
    StrictStr,
    ValidationError,
    field_validator,
)

from .algebra import BiLaurent, ParseError, checked_exp
from .quotient import PiElement, nf, parity_exponent, phi


class InvalidCertificate(ValueError):
    def __init__(self, report: "ValidityReport"):
        self.report = report
        super().__init__(report.reason)


class CertificateFormatError(ParseError):
    pass


@dataclass(frozen=True)
class Point:
    sign: int
    m: int


@dataclass(frozen=True)
class WhitneyDiskRecord:
    n: int
    points: Tuple[Point, ...] = ()


@dataclass(frozen=True)
class LinkMapCertificate:
    disks: Tuple[WhitneyDiskRecord, ...] = ()
    sigma_plus_zero: bool = True
    label: str = ""

    @property
    def point_count(self) -> int:
        return sum(len(d.points) for d in self.disks)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "sigma_plus_zero": self.sigma_plus_zero,
            "disks": [
                {"n": d.n, "points": [{"sign": p.sign, "m": p.m} for p in d.points]}
                for d in self.disks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# file schema -----------------------------------------------------------------

class _PointModel(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)
    sign: StrictInt
    m: StrictInt

    @field_validator("sign")
    @classmethod
    def _unit_sign(cls, v: int) -> int:
        if v not in (1, -1):
            raise ValueError("sign must be 1 or -1")
        return v


class _DiskModel(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)
    n: StrictInt
    points: List[_PointModel] = []


class _CertificateModel(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)
    label: StrictStr = ""
    sigma_plus_zero: StrictBool
    disks: List[_DiskModel]


def parse_link_map(text: str) -> LinkMapCertificate:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"not valid JSON: {exc}") from None
    try:
        model = _CertificateModel.model_validate(raw)
    except ValidationError as exc:
        raise CertificateFormatError(f"bad certificate: {exc}") from None
    try:
        disks = tuple(
            WhitneyDiskRecord(
                n=checked_exp(d.n),
                points=tuple(Point(p.sign, checked_exp(p.m)) for p in d.points),
            )
            for d in model.disks
        )
    except ArithmeticError as exc:
        raise CertificateFormatError(str(exc)) from None
    return LinkMapCertificate(disks=disks, sigma_plus_zero=model.sigma_plus_zero, label=model.label)


def load_link_map(path: Union[str, Path]) -> LinkMapCertificate:
    return parse_link_map(Path(path).read_text())


# invariants ------------------------------------------------------------------

@dataclass(frozen=True)
class ValidityReport:
    point_count: int
    augmentation: int
    sigma_plus_zero: bool
    valid: bool
    reason: str = ""


def validate(cert: LinkMapCertificate, strict: bool = False) -> ValidityReport:
    """Check that tau maps to 0 in Z/2 under s, t -> 1, and that sigma_+ = 0 is asserted.

    Odd point counts cannot come from a real link map; with ``strict`` they
    raise, otherwise the report says so and callers may carry on.
    """
    aug = tau_raw(cert).augment()
    reasons = []
    if aug % 2:
        reasons.append(f"odd intersection count {cert.point_count}: tau does not augment to 0 mod 2")
    if not cert.sigma_plus_zero:
        reasons.append("sigma_plus_zero not asserted; omega and tau are undefined")
    report = ValidityReport(
        point_count=cert.point_count,
        augmentation=aug,
        sigma_plus_zero=cert.sigma_plus_zero,
        valid=not reasons,
        reason="; ".join(reasons),
    )
    if strict and not report.valid:
        raise InvalidCertificate(report)
    return report


def omega_plus(cert: LinkMapCertificate) -> int:
    out = 0
    for disk in cert.disks:
        for p in disk.points:
            out ^= parity_exponent(disk.n, p.m)
    return out


def tau_raw(cert: LinkMapCertificate) -> BiLaurent:
    acc = {}
    for disk in cert.disks:
        for p in disk.points:
            key = (disk.n, p.m)
            acc[key] = acc.get(key, 0) + p.sign
    return BiLaurent(acc)


def tau(cert: LinkMapCertificate) -> PiElement:
    return nf(tau_raw(cert))


@dataclass(frozen=True)
class InvariantReport:
    label: str
    omega: int
    tau_raw: BiLaurent
    tau: PiElement
    phi_tau: PiElement
    theorem_holds: bool
    valid: bool
    point_count: int = 0
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "valid": self.valid,
            "point_count": self.point_count,
            "omega": self.omega,
            "tau_raw": str(self.tau_raw),
            "tau": str(self.tau),
            "phi_tau": str(self.phi_tau),
            "theorem_holds": self.theorem_holds,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantReport":
        return cls(
            label=d["label"],
            omega=d["omega"],
            tau_raw=BiLaurent.parse(d["tau_raw"]),
            tau=PiElement.parse(d["tau"]),
            phi_tau=PiElement.parse(d["phi_tau"]),
            theorem_holds=d["theorem_holds"],
            valid=d["valid"],
            point_count=d.get("point_count", 0),
            notes=tuple(d.get("notes", ())),
        )

    def to_text(self) -> str:
        lines = [
            f"label: {self.label}",
            f"valid: {str(self.valid).lower()}",
            f"point_count: {self.point_count}",
            f"omega: {self.omega}",
            f"tau_raw: {self.tau_raw}",
            f"tau: {self.tau}",
            f"phi_tau: {self.phi_tau}",
            f"theorem_holds: {str(self.theorem_holds).lower()}",
        ]
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines) + "\n"


def theorem_check(cert: LinkMapCertificate, strict: bool = False) -> InvariantReport:
    """Evaluate omega and tau and compare phi(tau) against (1 + t) * omega."""
    validity = validate(cert, strict=strict)
    omega = omega_plus(cert)
    raw = tau_raw(cert)
    phi_tau = phi(raw)
    notes = () if validity.valid else (validity.reason,)
    return InvariantReport(
        label=cert.label,
        omega=omega,
        tau_raw=raw,
        tau=nf(raw),
        phi_tau=phi_tau,
        theorem_holds=phi_tau == PiElement(omega, omega),
        valid=validity.valid,
        point_count=validity.point_count,
        notes=notes,
    )


def gen_random(
    seed: int, max_disks: int = 6, max_points_per_disk: int = 8, exp_range: int = 20
) -> LinkMapCertificate:
    """Seeded random certificate with an even number of intersection points."""
    if max_disks < 1 or max_points_per_disk < 1 or exp_range < 0:
        raise ValueError("bounds must be positive")
    rng = random.Random(seed)

    def exp() -> int:
        return rng.randint(-exp_range, exp_range)

    def point() -> Point:
        return Point(rng.choice((1, -1)), exp())

    disks = []
    for _ in range(rng.randint(1, max_disks)):
        n = exp()
        disks.append([n, [point() for _ in range(rng.randint(0, max_points_per_disk))]])
    if sum(len(pts) for _, pts in disks) % 2:
        # fix parity on the last disk that has room, else drop a point
        for _, pts in reversed(disks):
            if len(pts) < max_points_per_disk:
                pts.append(point())
                break
        else:
            disks[-1][1].pop()
    return LinkMapCertificate(
        disks=tuple(WhitneyDiskRecord(n, tuple(pts)) for n, pts in disks),
        sigma_plus_zero=True,
        label=f"random-{seed}",
    )
