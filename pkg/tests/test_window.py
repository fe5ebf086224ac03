import json
import random

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from omegatau.quotient import expand_relation, nf
from omegatau.window import (
    WindowDiagnostics,
    WindowTooLarge,
    gf2_basis,
    gf2_reduce,
    smith_invariant_factors,
    window_relations,
    window_report,
)


def sympy_factors(rows):
    return [int(d) for d in invariant_factors(Matrix(rows), domain=ZZ) if d != 0]


@pytest.mark.parametrize("seed", range(25))
def test_snf_matches_sympy_random(seed):
    rng = random.Random(seed)
    r, c = rng.randint(1, 7), rng.randint(1, 7)
    rows = [[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)]
    assert smith_invariant_factors(rows) == sympy_factors(rows)


def test_snf_known_examples():
    assert smith_invariant_factors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert smith_invariant_factors([[0, 0], [0, 0]]) == []
    assert smith_invariant_factors([[4, 0], [0, 6]]) == [2, 12]


def _window_rows(N):
    mons = [(a, b) for a in range(-N, N + 1) for b in range(-N, N + 1)]
    col = {m: i for i, m in enumerate(mons)}
    rows = []
    for inst in window_relations(N):
        row = [0] * len(mons)
        for k, c in expand_relation(inst).items():
            row[col[k]] = c
        rows.append(row)
    return rows


@pytest.mark.parametrize("N", [1, 2, 3])
def test_window_snf_matches_sympy(N):
    rep = window_report(N)
    assert list(rep.invariant_factors) == sympy_factors(_window_rows(N))


def test_window_relations_stay_inside():
    for N in (1, 2, 3):
        for inst in window_relations(N):
            assert all(abs(a) <= N and abs(b) <= N for a, b in expand_relation(inst))


def test_window_relations_complete_for_box():
    # brute force over a wider parameter box: nothing in-window is missed
    from omegatau.quotient import RelationInstance

    N = 2
    found = set(window_relations(N))
    for kind in ("T2", "T3", "T4"):
        for n in range(-3 * N, 3 * N + 1):
            for m in range(-3 * N, 3 * N + 1):
                inst = RelationInstance(kind, n, m)
                if all(abs(a) <= N and abs(b) <= N for a, b in expand_relation(inst)):
                    assert inst in found, inst


@pytest.mark.parametrize("N", [1, 2])
def test_window_soundness_and_independence(N):
    rep = window_report(N)
    assert rep.soundness == 1
    assert rep.independence == 1
    assert rep.monomial_count == (2 * N + 1) ** 2


def test_window_soundness_oracle():
    # independent recomputation: nf applied to every enumerated relation
    assert all(not nf(expand_relation(inst)) for inst in window_relations(2))


def test_mod2_rank_matches_odd_invariant_factors():
    for N in (1, 2, 3):
        rep = window_report(N)
        assert rep.mod2_rank == sum(1 for d in rep.invariant_factors if d % 2)
        assert rep.notes == ()


def test_gf2_membership():
    basis = gf2_basis([0b0110, 0b0011, 0b0101])
    assert len(basis) == 2
    assert gf2_reduce(basis, 0b0101) == 0
    assert gf2_reduce(basis, 0b1000) != 0
    assert gf2_reduce(basis, 0b0001) != 0


def test_window_too_large():
    with pytest.raises(WindowTooLarge):
        window_report(50)
    with pytest.raises(ValueError):
        window_report(0)


def test_window_report_serialization():
    rep = window_report(2)
    assert WindowDiagnostics.from_dict(json.loads(rep.to_json())) == rep
    text = rep.to_text()
    assert "soundness: 1" in text and "independence: 1" in text
