import itertools
import time

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from omegatau.algebra import BiLaurent
from omegatau.certify import RangeExceeded, certify_nf, verify_certificate
from omegatau.quotient import NFCertificate, RelationInstance, parity_exponent, parse_nf_certificate

S, T = sympy.symbols("s t")


def sympy_relation(inst: RelationInstance):
    """Relation polynomials written straight from their defining formulas."""
    n, m = inst.n, inst.m
    return {
        "T1": S**n * T**n - S**n,
        "T2": S**n * T**m + S**-n * T ** (m - n),
        "T3": S**n * T**m + S**m * T**n,
        "T4": S**n * T**m * (1 - T) ** 2,
    }[inst.kind]


def sympy_check(cert: NFCertificate) -> bool:
    n, m = cert.target
    total = sum((c * sympy_relation(inst) for c, inst in cert.combo), sympy.Integer(0))
    return sympy.expand(total - (S**n * T**m - T**cert.nf_bit)) == 0


def test_certificate_one_zero():
    cert = certify_nf(1, 0)
    assert cert.nf_bit == 1
    assert set(cert.combo) == {(1, RelationInstance("T3", 1, 0)), (-1, RelationInstance("T2", 0, 1))}
    # (s + t) - 2t = s - t
    assert cert.combination() == BiLaurent.parse("s - t")
    assert verify_certificate(cert) == 1


def test_certificate_identity_is_empty():
    cert = certify_nf(0, 0)
    assert cert.combo == () and cert.nf_bit == 0
    assert verify_certificate(cert) == 1


def test_certificate_t_squared():
    cert = certify_nf(0, 2)
    assert set(cert.combo) == {
        (1, RelationInstance("T4", 0, 0)),
        (1, RelationInstance("T2", 0, 1)),
        (-1, RelationInstance("T2", 0, 0)),
    }
    assert cert.combination() == BiLaurent.parse("t^2 - 1")


def test_sweep_range_8():
    start = time.perf_counter()
    for n, m in itertools.product(range(-8, 9), repeat=2):
        cert = certify_nf(n, m)
        assert cert.target == (n, m)
        assert cert.nf_bit == (n + n * m + m) % 2
        assert verify_certificate(cert) == 1, (n, m)
    assert time.perf_counter() - start < 5


@pytest.mark.parametrize("n,m", [(0, 5), (1, -3), (2, 2), (-3, 4), (5, -6), (-2, -7), (7, 1)])
def test_certificates_against_sympy(n, m):
    assert sympy_check(certify_nf(n, m))


@given(st.integers(-60, 60), st.integers(-60, 60))
def test_certificates_wide_range(n, m):
    assert verify_certificate(certify_nf(n, m)) == 1


def test_deterministic():
    assert certify_nf(4, -5) == certify_nf(4, -5)
    assert certify_nf(4, -5).to_text() == certify_nf(4, -5).to_text()


def test_tampered_coefficient_fails():
    cert = certify_nf(3, 2)
    (c, inst), *rest = cert.combo
    bad = NFCertificate(cert.target, cert.nf_bit, ((c + 1, inst), *rest))
    assert verify_certificate(bad) == 0


def test_tampered_bit_fails():
    cert = certify_nf(2, 2)
    assert verify_certificate(NFCertificate(cert.target, 1 - cert.nf_bit, cert.combo)) == 0
    assert verify_certificate(NFCertificate(cert.target, 2, cert.combo)) == 0


def test_tampered_target_fails():
    cert = certify_nf(2, 3)
    assert verify_certificate(NFCertificate((2, 5), cert.nf_bit, cert.combo)) == 0


def test_range_exceeded():
    with pytest.raises(RangeExceeded):
        certify_nf(9, 0, limit=8)
    with pytest.raises(RangeExceeded):
        certify_nf(0, -300)


def test_serialization_roundtrip():
    cert = certify_nf(-3, 4)
    text = cert.to_text()
    assert text.splitlines()[0] == f"target -3 4 nf {parity_exponent(-3, 4)}"
    back = parse_nf_certificate(text)
    assert back == cert
    assert verify_certificate(back) == 1


def test_serialization_line_format():
    text = certify_nf(1, 0).to_text()
    assert text == "target 1 0 nf 1\n-1 T2(0,1)\n1 T3(1,0)\n"
