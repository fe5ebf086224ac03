"""Seeded end-to-end property checks, run by ``omegatau selftest``.

Every check draws from its own ``random.Random`` derived from the one seed,
so output depends only on (seed, trials, range, window).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, List

from .algebra import (
    ONE_MINUS_S,
    BiLaurent,
    GroupElem,
    LaurentPoly,
    NotDivisible,
    divide_exact_one_minus_s,
    extract_q,
)
from .certify import certify_nf, verify_certificate
from .intersection import (
    IntersectionRecord,
    SurgeryConfig,
    basis_sphere_lambda,
    lambda_sum,
    surgery_pushoff,
)
from .invariants import (
    InvalidCertificate,
    LinkMapCertificate,
    Point,
    WhitneyDiskRecord,
    gen_random,
    omega_plus,
    tau_raw,
    validate,
)
from .quotient import KINDS, PiElement, RelationInstance, expand_relation, nf, phi
from .window import window_report


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    failures: int = 0
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{self.name}: {status} cases={self.cases} failures={self.failures}{extra}"


def random_laurent(rng: random.Random, max_terms=5, exp_range=6, coeff_range=5) -> LaurentPoly:
    acc = {}
    for _ in range(rng.randint(0, max_terms)):
        e = rng.randint(-exp_range, exp_range)
        acc[e] = acc.get(e, 0) + rng.randint(-coeff_range, coeff_range)
    return LaurentPoly(acc)


def random_bilaurent(rng: random.Random, max_terms=5, exp_range=6, coeff_range=5) -> BiLaurent:
    acc = {}
    for _ in range(rng.randint(0, max_terms)):
        key = (rng.randint(-exp_range, exp_range), rng.randint(-exp_range, exp_range))
        acc[key] = acc.get(key, 0) + rng.randint(-coeff_range, coeff_range)
    return BiLaurent(acc)


def random_records(rng: random.Random, max_points=8, exp_range=20) -> List[IntersectionRecord]:
    return [
        IntersectionRecord(rng.choice((1, -1)), GroupElem(rng.randint(-exp_range, exp_range)))
        for _ in range(rng.randint(0, max_points))
    ]


def _count(name: str, cases, pred: Callable, detail: str = "") -> CheckResult:
    total = bad = 0
    for case in cases:
        total += 1
        if not pred(case):
            bad += 1
    return CheckResult(name, bad == 0, total, bad, detail)


def check_ring_laws(rng: random.Random, trials: int) -> CheckResult:
    def case(_):
        ok = True
        for gen in (random_laurent, random_bilaurent):
            p, q, r = gen(rng), gen(rng), gen(rng)
            ok &= (p * q) * r == p * (q * r)
            ok &= p * q == q * p and p + q == q + p
            ok &= p * (q + r) == p * q + p * r
            ok &= (p * q).augment() == p.augment() * q.augment()
            ok &= (p + q).augment() == p.augment() + q.augment()
            ok &= not (p + (-p))
            ok &= type(p).parse(str(p)) == p
        return ok

    return _count("ring_laws", range(trials), case)


def check_division(rng: random.Random, trials: int) -> CheckResult:
    def case(_):
        q = random_laurent(rng)
        k = rng.choice((1, 2))
        p = ONE_MINUS_S**k * q
        back = p
        for stage in range(k):
            back = divide_exact_one_minus_s(back, stage=stage + 1)
        if back != q:
            return False
        junk = p + LaurentPoly.monomial(rng.randint(-5, 5))
        try:
            divide_exact_one_minus_s(junk)
        except NotDivisible:
            return True
        return False

    return _count("division_roundtrip", range(trials), case)


def check_certificates(limit: int) -> CheckResult:
    cells = [(n, m) for n in range(-limit, limit + 1) for m in range(-limit, limit + 1)]
    return _count(
        "nf_certificates",
        cells,
        lambda nm: verify_certificate(certify_nf(*nm)) == 1,
        f"range={limit}",
    )


def relation_instances(r1: int = 64, r2: int = 32):
    for n in range(-r1, r1 + 1):
        yield RelationInstance("T1", n)
    for kind in KINDS[1:]:
        for n in range(-r2, r2 + 1):
            for m in range(-r2, r2 + 1):
                yield RelationInstance(kind, n, m)


def check_soundness() -> CheckResult:
    return _count(
        "relation_soundness",
        relation_instances(),
        lambda inst: not nf(expand_relation(inst)),
    )


def check_nf_phi(rng: random.Random, trials: int) -> CheckResult:
    monos = [BiLaurent.monomial(n, m) for n in range(-16, 17) for m in range(-16, 17)]
    polys = monos + [random_bilaurent(rng, exp_range=30) for _ in range(trials)]

    def case(p):
        q = random_bilaurent(rng)
        return nf(p) == phi(p) and nf(p + q) == nf(p) + nf(q) and not nf(2 * p)

    return _count("nf_phi_additive", polys, case)


def check_main_lemma(rng: random.Random, trials: int) -> CheckResult:
    seeds = [rng.getrandbits(32) for _ in range(trials)]

    def case(seed):
        c = gen_random(seed, 6, 8, 20)
        w = omega_plus(c)
        raw = tau_raw(c)
        return validate(c).valid and raw.augment() % 2 == 0 and phi(raw) == PiElement(w, w)

    return _count("main_lemma", seeds, case, "phi(tau) == (1+t)*omega")


def _odd_mutation(c: LinkMapCertificate, rng: random.Random) -> LinkMapCertificate:
    disks = list(c.disks)
    i = rng.randrange(len(disks))
    extra = Point(rng.choice((1, -1)), rng.randint(-20, 20))
    disks[i] = WhitneyDiskRecord(disks[i].n, disks[i].points + (extra,))
    return LinkMapCertificate(tuple(disks), c.sigma_plus_zero, c.label + "-odd")


def check_parity(rng: random.Random, trials: int) -> CheckResult:
    seeds = [rng.getrandbits(32) for _ in range(trials)]

    def case(seed):
        bad = _odd_mutation(gen_random(seed, 6, 8, 20), rng)
        if validate(bad).valid:
            return False
        try:
            validate(bad, strict=True)
        except InvalidCertificate:
            return True
        return False

    return _count("parity_constraint", seeds, case, "odd mutations rejected")


def check_surgery(rng: random.Random, trials: int) -> CheckResult:
    def case(_):
        pts = random_records(rng)
        g = GroupElem(rng.randint(-6, 6))
        ok = True
        for inverse in (False, True):
            cfg = SurgeryConfig(g, inverse)
            used = g.inverse() if inverse else g
            out = lambda_sum(surgery_pushoff(pts, cfg))
            ok &= out == (LaurentPoly.constant(1) - LaurentPoly.from_elem(used)) * lambda_sum(pts)
            ok &= out.augment() == 0
        return ok

    return _count("surgery_conservation", range(trials), case)


def check_basis_sphere(rng: random.Random, trials: int) -> CheckResult:
    qs = [LaurentPoly.constant(1)] + [random_laurent(rng) for _ in range(trials - 1)]

    def case(q):
        lam = lambda_sum(basis_sphere_lambda(q, GroupElem(1)))
        return lam == ONE_MINUS_S**2 * q and extract_q(lam) == (q, q.augment())

    return _count("basis_sphere", qs, case)


def check_windows(windows) -> CheckResult:
    reports = {N: window_report(N) for N in windows}
    bad = sum(1 for r in reports.values() if not (r.soundness and r.independence))
    detail = " ".join(
        f"N={N}:rank={r.lattice_rank},torsion={[d for d in r.invariant_factors if d > 1]}"
        for N, r in reports.items()
    )
    return CheckResult("window", bad == 0, len(reports), bad, detail)


def run_selftest(seed: int = 0, trials: int = 10000, limit: int = 8, window: int = 4) -> List[CheckResult]:
    master = random.Random(seed)

    def sub() -> random.Random:
        return random.Random(master.getrandbits(64))

    small = max(1, trials // 10)
    return [
        check_ring_laws(sub(), small),
        check_division(sub(), small),
        check_certificates(limit),
        check_soundness(),
        check_nf_phi(sub(), small),
        check_main_lemma(sub(), trials),
        check_parity(sub(), trials),
        check_surgery(sub(), trials),
        check_basis_sphere(sub(), small),
        check_windows(range(2, window + 1)),
    ]
