"""Finite-window diagnostics for the relation lattice.

Only relations whose expansions fit inside the exponent box [-N, N]^2 are
kept, so the window quotient is a truncation: it can confirm that ``nf``
kills every relation it sees and that 1 and t survive mod 2, but it says
nothing about completeness.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Sequence, Tuple

from .quotient import RelationInstance, expand_relation, nf

MAX_WINDOW = 8


class WindowTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class WindowDiagnostics:
    window: int
    relation_count: int
    monomial_count: int
    lattice_rank: int
    invariant_factors: Tuple[int, ...]
    mod2_rank: int
    soundness: int
    independence: int
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["invariant_factors"] = list(self.invariant_factors)
        d["notes"] = list(self.notes)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, d: dict) -> "WindowDiagnostics":
        d = dict(d)
        d["invariant_factors"] = tuple(d["invariant_factors"])
        d["notes"] = tuple(d.get("notes", ()))
        return cls(**d)

    def to_text(self) -> str:
        lines = [
            f"window: {self.window}",
            f"relations: {self.relation_count}",
            f"monomials: {self.monomial_count}",
            f"lattice_rank: {self.lattice_rank}",
            f"invariant_factors: {_compress(self.invariant_factors)}",
            f"mod2_rank: {self.mod2_rank}",
            f"soundness: {self.soundness}",
            f"independence: {self.independence}",
        ]
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines) + "\n"


def _compress(factors: Sequence[int]) -> str:
    if not factors:
        return "(none)"
    runs: List[Tuple[int, int]] = []
    for d in factors:
        if runs and runs[-1][0] == d:
            runs[-1] = (d, runs[-1][1] + 1)
        else:
            runs.append((d, 1))
    return " ".join(f"{d}^{k}" for d, k in runs)


def window_relations(N: int) -> List[RelationInstance]:
    """All relation instances whose expansion lies in [-N, N]^2, in a fixed order."""
    rng = range(-N, N + 1)

    def inside(inst: RelationInstance) -> bool:
        return all(abs(a) <= N and abs(b) <= N for a, b in expand_relation(inst))

    out = []
    # parameters beyond the box always produce an outside term, except the
    # zero expansion T1(0) which is harmless to keep
    for n in rng:
        out.append(RelationInstance("T1", n))
    for kind in ("T2", "T3"):
        for n in rng:
            for m in rng:
                out.append(RelationInstance(kind, n, m))
    for n in rng:
        for m in range(-N, N - 1):
            out.append(RelationInstance("T4", n, m))
    return [inst for inst in out if inside(inst)]


def smith_invariant_factors(rows: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero diagonal of the Smith normal form, each dividing the next."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    nrows, ncols = len(A), len(A[0])
    diag = []
    t = 0
    while t < min(nrows, ncols):
        pivot = _min_abs(A, t, t)
        if pivot is None:
            break
        i, j = pivot
        A[t], A[i] = A[i], A[t]
        for r in A:
            r[t], r[j] = r[j], r[t]
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, nrows):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        ri, rt = A[i], A[t]
                        for j in range(t, ncols):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if A[i][t]:
                        clean = False
            rt = A[t]
            for j in range(t + 1, ncols):
                if rt[j]:
                    q = rt[j] // p
                    if q:
                        for r in A[t:]:
                            if r[t]:
                                r[j] -= q * r[t]
                    if rt[j]:
                        clean = False
            if not clean:
                # move the smallest leftover in row/column t onto the diagonal
                best = (abs(A[t][t]), t, t)
                for i in range(t + 1, nrows):
                    if A[i][t] and abs(A[i][t]) < best[0]:
                        best = (abs(A[i][t]), i, t)
                for j in range(t + 1, ncols):
                    if A[t][j] and abs(A[t][j]) < best[0]:
                        best = (abs(A[t][j]), t, j)
                _, i, j = best
                A[t], A[i] = A[i], A[t]
                for r in A:
                    r[t], r[j] = r[j], r[t]
                continue
            # row and column t are clear; enforce divisibility of the rest
            bad = None
            for i in range(t + 1, nrows):
                if any(x % p for x in A[i][t + 1:]):
                    bad = i
                    break
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def _min_abs(A, r0: int, c0: int):
    best = None
    for i in range(r0, len(A)):
        row = A[i]
        for j in range(c0, len(row)):
            v = row[j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return i, j
    return None if best is None else best[1:]


def gf2_basis(rows: Sequence[int]) -> Dict[int, int]:
    """Echelon basis of bitmask row vectors over GF(2), keyed by pivot bit."""
    basis: Dict[int, int] = {}
    for v in rows:
        v = gf2_reduce(basis, v)
        if v:
            basis[v.bit_length() - 1] = v
    return basis


def gf2_reduce(basis: Dict[int, int], v: int) -> int:
    """Residue of v modulo the span of ``basis``; zero iff v is in the span."""
    for pivot in sorted(basis, reverse=True):
        if (v >> pivot) & 1:
            v ^= basis[pivot]
    return v


def window_report(N: int) -> WindowDiagnostics:
    if N < 1:
        raise ValueError("window must be at least 1")
    if N > MAX_WINDOW:
        raise WindowTooLarge(f"window {N} exceeds the supported maximum {MAX_WINDOW}")
    side = 2 * N + 1
    monomials = [(a, b) for a in range(-N, N + 1) for b in range(-N, N + 1)]
    col = {mono: idx for idx, mono in enumerate(monomials)}
    relations = window_relations(N)

    rows: List[List[int]] = []
    masks: List[int] = []
    sound = 1
    for inst in relations:
        poly = expand_relation(inst)
        if nf(poly):
            sound = 0
        row = [0] * (side * side)
        mask = 0
        for mono, c in poly.items():
            row[col[mono]] = c
            if c & 1:
                mask |= 1 << col[mono]
        rows.append(row)
        masks.append(mask)

    factors = smith_invariant_factors(rows)
    basis = gf2_basis(masks)
    one = 1 << col[(0, 0)]
    t = 1 << col[(0, 1)]
    independent = int(all(gf2_reduce(basis, v) for v in (one, t, one ^ t)))

    odd = sum(1 for d in factors if d % 2)
    notes = []
    if odd != len(basis):
        notes.append(f"mod-2 rank {len(basis)} disagrees with odd invariant factors {odd}")
    return WindowDiagnostics(
        window=N,
        relation_count=len(relations),
        monomial_count=side * side,
        lattice_rank=len(factors),
        invariant_factors=tuple(factors),
        mod2_rank=len(basis),
        soundness=sound,
        independence=independent,
        notes=tuple(notes),
    )
