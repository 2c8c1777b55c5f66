"""Exact rank of I + A and the multiplicity of the eigenvalue -1.

Everything here is integer arithmetic.  The multiplicity of -1 is
``n - rank(I + A)``; ``charpoly_multiplicity_oracle`` recomputes it from the
characteristic polynomial so the two routes can be compared.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Sequence

from .errors import CapacityError, ConsistencyError
from .graph import Graph
from .skeleton import skeleton_structure

CHARPOLY_MAX_N = 64

IntMatrix = list[list[int]]


def identity_plus_adjacency(g: Graph) -> IntMatrix:
    return [[1 if (u == v or u in g.adj[v]) else 0 for u in range(g.n)] for v in range(g.n)]


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free elimination.

    The pivot is the first nonzero entry (in row order) of the current column.
    Every division is exact, so no fractions or floats appear.
    """
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank, prev = 0, 1
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        prow = m[rank]
        for r in range(rank + 1, rows):
            row = m[r]
            f = row[c]
            for k in range(c + 1, cols):
                row[k] = (p * row[k] - f * prow[k]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def rank_I_plus_A(g: Graph) -> int:
    return bareiss_rank(identity_plus_adjacency(g)) if g.n else 0


def rank_via_skeleton(g: Graph) -> int:
    """rank(I + A) of the skeleton structure instead of the full graph."""
    return rank_I_plus_A(skeleton_structure(g))


def lambda_term(g: Graph) -> int:
    """|V(S)| - rank(I + A(S)) for the skeleton structure S of ``g``."""
    s = skeleton_structure(g)
    value = s.n - rank_I_plus_A(s)
    if value < 0:
        raise ConsistencyError(f"negative lambda {value}")
    return value


def minus_one_multiplicity(g: Graph) -> int:
    k = g.n - rank_I_plus_A(g)
    # the rank bound rank <= |V(S)| gives k >= n - |V(S)|
    if k < g.n - skeleton_structure(g).n:
        raise ConsistencyError("multiplicity below n - |V(S)|")
    return k


def charpoly(g: Graph) -> list[int]:
    """Coefficients of det(xI - A), leading coefficient first (Faddeev-LeVerrier).

    ``M_k = A M_{k-1} + c_{k-1} I`` and ``c_k = -tr(A M_k) / k``; with an integer
    matrix every division is exact.
    """
    n = g.n
    if n > CHARPOLY_MAX_N:
        raise CapacityError(f"characteristic polynomial limited to n <= {CHARPOLY_MAX_N}")
    nbrs = [sorted(a) for a in g.adj]
    coeffs = [1]
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        # A @ M: row i is the sum of rows of M over the neighbors of i
        am = []
        for i in range(n):
            acc = [0] * n
            for j in nbrs[i]:
                acc = [x + y for x, y in zip(acc, m[j])]
            am.append(acc)
        for i in range(n):
            am[i][i] += c_prev
        m = am
        # tr(A M) = sum over ordered neighbor pairs (i, j) of M[j][i]
        trace = sum(m[j][i] for i in range(n) for j in nbrs[i])
        if trace % k:
            raise ConsistencyError("inexact division in Faddeev-LeVerrier")
        coeffs.append(-trace // k)
    return coeffs


def root_multiplicity(coeffs: Sequence[int], root: int) -> int:
    """Multiplicity of ``root`` in the integer polynomial (leading coefficient first)."""
    poly = list(coeffs)
    if not any(poly):
        raise ValueError("zero polynomial")
    count = 0
    while len(poly) > 1:
        quotient = [poly[0]]
        for c in poly[1:]:
            quotient.append(c + root * quotient[-1])
        if quotient.pop() != 0:
            break
        poly = quotient
        count += 1
    return count


def charpoly_multiplicity_oracle(g: Graph) -> int:
    return root_multiplicity(charpoly(g), -1)


@dataclass(frozen=True)
class SpectralReport:
    n: int
    rank_I_plus_A: int
    skeleton_vertices: int
    lambda_: int
    minus_one_multiplicity: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["lambda"] = d.pop("lambda_")
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def summary(self) -> str:
        k = self.minus_one_multiplicity
        if k == 0:
            return "-1 is not an eigenvalue"
        return f"-1 is an eigenvalue with multiplicity {k}"


def spectral_report(g: Graph) -> SpectralReport:
    rank = rank_I_plus_A(g)
    s = skeleton_structure(g)
    lam = s.n - rank_I_plus_A(s)
    report = SpectralReport(g.n, rank, s.n, lam, g.n - rank)
    if report.rank_I_plus_A != report.skeleton_vertices - report.lambda_ or lam < 0:
        raise ConsistencyError(f"rank identity fails: {report}")
    return report
