"""Exit criteria, each at its stated scale and tolerance.

Run with ``pytest tests/test_acceptance.py``; the summary prints one
PASS/FAIL line per criterion.
"""

import itertools
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from omegatau.algebra import ONE_MINUS_S, GroupElem, LaurentPoly, extract_q
from omegatau.certify import certify_nf, verify_certificate
from omegatau.intersection import (
    IntersectionRecord,
    SurgeryConfig,
    basis_sphere_lambda,
    lambda_sum,
    surgery_pushoff,
)
from omegatau.invariants import (
    InvalidCertificate,
    LinkMapCertificate,
    Point,
    WhitneyDiskRecord,
    gen_random,
    load_link_map,
    omega_plus,
    tau_raw,
    validate,
)
from omegatau.quotient import PiElement, RelationInstance, expand_relation, nf, phi
from omegatau.window import window_report

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
SEED = 20240611
POPULATION = 10_000


def population():
    rng = random.Random(SEED)
    return [gen_random(rng.getrandbits(32), 6, 8, 20) for _ in range(POPULATION)]


def hand_fixtures():
    names = ["omega1", "omega0", "empty", "canceling", "two_disks"]
    return [load_link_map(FIXTURES / f"{n}.json") for n in names]


@pytest.mark.acceptance("normal-form certification sweep: 289/289 verified in < 5 s")
def test_nf_certification_sweep():
    start = time.perf_counter()
    verified = 0
    for n, m in itertools.product(range(-8, 9), repeat=2):
        cert = certify_nf(n, m)
        assert cert.nf_bit == (n + n * m + m) % 2
        verified += verify_certificate(cert)
    elapsed = time.perf_counter() - start
    assert verified == 289
    assert elapsed < 5.0, elapsed


@pytest.mark.acceptance("relation soundness: T1 on [-64,64], T2-T4 on [-32,32]^2 all map to 0")
def test_relation_soundness():
    failures = [n for n in range(-64, 65) if nf(expand_relation(RelationInstance("T1", n)))]
    for kind in ("T2", "T3", "T4"):
        for n, m in itertools.product(range(-32, 33), repeat=2):
            if nf(expand_relation(RelationInstance(kind, n, m))):
                failures.append((kind, n, m))
    assert failures == []


@pytest.mark.acceptance("main lemma: phi(tau) = (1+t) omega on 10^4 random + fixtures in < 10 s")
def test_main_lemma():
    start = time.perf_counter()
    certs = population() + hand_fixtures()
    bad = []
    for c in certs:
        w = omega_plus(c)
        if phi(tau_raw(c)) != PiElement(w, w):
            bad.append(c.label)
    elapsed = time.perf_counter() - start
    assert len(certs) == POPULATION + 5
    assert bad == []
    assert elapsed < 10.0, elapsed


@pytest.mark.acceptance("parity constraint: even population augments to 0; odd mutants rejected")
def test_parity_constraint():
    rng = random.Random(SEED + 1)
    for c in population():
        assert tau_raw(c).augment() % 2 == 0
        assert validate(c).valid
        disks = list(c.disks)
        i = rng.randrange(len(disks))
        extra = Point(rng.choice((1, -1)), rng.randint(-20, 20))
        disks[i] = WhitneyDiskRecord(disks[i].n, disks[i].points + (extra,))
        odd = LinkMapCertificate(tuple(disks), True, c.label)
        assert not validate(odd).valid
        with pytest.raises(InvalidCertificate):
            validate(odd, strict=True)


@pytest.mark.acceptance("surgery conservation: 10^4 random (P, g), both conventions, augmentation 0")
def test_surgery_conservation():
    rng = random.Random(SEED + 2)
    for _ in range(10_000):
        pts = [
            IntersectionRecord(rng.choice((1, -1)), GroupElem(rng.randint(-20, 20)))
            for _ in range(rng.randint(0, 8))
        ]
        g = GroupElem(rng.randint(-6, 6))
        for inverse in (False, True):
            used = g.inverse() if inverse else g
            out = lambda_sum(surgery_pushoff(pts, SurgeryConfig(g, inverse)))
            factor = LaurentPoly.constant(1) - LaurentPoly.from_elem(used)
            assert out == factor * lambda_sum(pts)
            assert out.augment() == 0


@pytest.mark.acceptance("basis-sphere divisibility: extract_q recovers (q, q(1)) for 10^3 q incl. q = 1")
def test_basis_sphere_divisibility():
    unit = lambda_sum(basis_sphere_lambda(LaurentPoly.constant(1), GroupElem(1)))
    assert unit == ONE_MINUS_S**2
    assert extract_q(unit) == (LaurentPoly.constant(1), 1)
    rng = random.Random(SEED + 3)
    for _ in range(1000):
        q = LaurentPoly(
            {rng.randint(-8, 8): rng.randint(-6, 6) for _ in range(rng.randint(0, 6))}
        )
        lam = lambda_sum(basis_sphere_lambda(q, GroupElem(1)))
        assert extract_q(lam) == (q, q.augment())


@pytest.mark.acceptance("window diagnostic: N in {2,3,4} sound and independent; N=4 SNF in < 30 s")
def test_window_diagnostic():
    for N in (2, 3, 4):
        start = time.perf_counter()
        rep = window_report(N)
        elapsed = time.perf_counter() - start
        assert rep.soundness == 1 and rep.independence == 1, rep
        if N == 4:
            assert elapsed < 30.0, elapsed


@pytest.mark.acceptance("determinism: two runs of `selftest --seed 42` are byte-identical")
def test_selftest_determinism():
    cmd = [sys.executable, "-m", "omegatau", "selftest", "--seed", "42"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0, first.stderr.decode()
    assert first.stdout == second.stdout
    assert first.stdout.decode().endswith("selftest: PASS\n")
