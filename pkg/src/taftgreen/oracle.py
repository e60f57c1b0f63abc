"""Brute-force decomposition of matrix representations into indecomposables.

This is the independent ground truth for the closed-form tensor product
rules in :mod:`taftgreen.green`: tensor products are formed through the
coproduct at the matrix level and split by exact rank bookkeeping.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping

from . import linalg
from .cyclotomic import CycloNum
from .errors import InvalidArgumentError, InvalidRepresentationError
from .linalg import Matrix
from .modules import MatrixRep, ModuleLabel, build_rep
from .taft import q_powers

__all__ = ["ModuleMultiset", "tensor_reps", "direct_sum", "decompose", "tensor_decompose"]


class ModuleMultiset:
    """A formal sum of indecomposable labels with positive multiplicities."""

    __slots__ = ("order", "counts")

    def __init__(self, order: int, counts: Mapping[ModuleLabel, int] | Iterable[ModuleLabel] = ()):
        self.order = order
        if isinstance(counts, Mapping):
            items = counts.items()
        else:
            items = Counter(counts).items()
        clean: dict[ModuleLabel, int] = {}
        for label, m in items:
            label.validate(order)
            if m < 0:
                raise InvalidArgumentError(f"negative multiplicity for {label}")
            if m:
                clean[label] = clean.get(label, 0) + m
        self.counts = dict(sorted(clean.items()))

    @property
    def dimension(self) -> int:
        return sum(label.l * m for label, m in self.counts.items())

    def labels(self) -> list[ModuleLabel]:
        return list(self.counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleMultiset):
            return NotImplemented
        return self.order == other.order and self.counts == other.counts

    def __hash__(self):
        return hash((self.order, tuple(self.counts.items())))

    def __repr__(self) -> str:
        return f"ModuleMultiset(n={self.order}, {self})"

    def __str__(self) -> str:
        if not self.counts:
            return "0"
        parts = []
        for label, m in self.counts.items():
            parts.append(str(label) if m == 1 else f"{m}*{label}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "n": self.order,
            "summands": [
                {"l": label.l, "r": label.r, "mult": m} for label, m in self.counts.items()
            ],
        }


def _same_order(a: MatrixRep, b: MatrixRep) -> int:
    if a.order != b.order:
        raise InvalidArgumentError(f"order mismatch: {a.order} vs {b.order}")
    return a.order


def tensor_reps(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    """A (x) B through the coproduct: g -> g(x)g, h -> 1(x)h + h(x)g."""
    n = _same_order(a, b)
    g = linalg.kron(a.g_matrix, b.g_matrix, n)
    h = linalg.matadd(
        linalg.kron(linalg.identity(n, a.dimension), b.h_matrix, n),
        linalg.kron(a.h_matrix, b.g_matrix, n),
    )
    return MatrixRep(n, g, h)


def direct_sum(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    n = _same_order(a, b)
    return MatrixRep(
        n,
        linalg.block_diag(a.g_matrix, b.g_matrix, n),
        linalg.block_diag(a.h_matrix, b.h_matrix, n),
    )


def zero_rep(n: int) -> MatrixRep:
    return MatrixRep(n, [], [])


def eigenspaces(rep: MatrixRep) -> list[Matrix]:
    """Bases (as columns) of the g-eigenspaces V_i for eigenvalue q^i.

    The projector onto V_i is rho(e_i) = (1/n) sum_j q^(-ij) rho(g)^j, so no
    eigenvalue search is needed.
    """
    n, d = rep.order, rep.dimension
    qp = q_powers(n)
    g_pows = [linalg.identity(n, d)]
    for _ in range(n - 1):
        g_pows.append(linalg.matmul(g_pows[-1], rep.g_matrix, n))
    inv_n = CycloNum.from_rational(n, Fraction(1, n))
    spaces = []
    for i in range(n):
        proj = linalg.zeros(n, d, d)
        for j in range(n):
            proj = linalg.matadd(proj, linalg.scale(g_pows[j], qp[(-i * j) % n]))
        spaces.append(linalg.column_space(linalg.scale(proj, inv_n)))
    return spaces


def _apply(m: Matrix, cols: Matrix, n: int) -> Matrix:
    if not cols or not cols[0]:
        return [[] for _ in m]
    return linalg.matmul(m, cols, n)


def _rank(cols: Matrix) -> int:
    if not cols or not cols[0]:
        return 0
    return linalg.rank(cols)


def decompose(rep: MatrixRep) -> ModuleMultiset:
    """Multiplicities m(l, i) with rep = sum m(l, i) M(l, i).

    With V_t the q^t-eigenspace of g, h maps V_t into V_(t-1).  A summand
    M(l, t) contributes a string v, hv, ..., h^(l-1)v with v in V_t, so
    m(l, t) = c(t-l+1, l-1) - c(t-l+1, l), where
    c(s, k) = dim(ker h  cap  h^k V_(s+k)) = rank(h^k B) - rank(h^(k+1) B)
    for B a basis of V_(s+k).
    """
    n, d = rep.order, rep.dimension
    if d == 0:
        return ModuleMultiset(n)
    failures = rep.relation_failures()
    if failures:
        raise InvalidRepresentationError("relations violated: " + ", ".join(failures))
    spaces = eigenspaces(rep)
    if sum(linalg.columns(v) for v in spaces) != d:
        raise InvalidRepresentationError("g is not diagonalizable over n-th roots of unity")
    h = rep.h_matrix
    # h must lower the residue by one
    for t in range(n):
        image = _apply(h, spaces[t], n)
        if _rank(image) and _rank(_hstack(spaces[(t - 1) % n], image)) != linalg.columns(spaces[(t - 1) % n]):
            raise InvalidRepresentationError(f"h does not map V_{t} into V_{t - 1}")

    # ranks[t][k] = rank(h^k B_t) for k = 0..n
    ranks = []
    for t in range(n):
        row = []
        cur = spaces[t]
        for _ in range(n + 1):
            row.append(_rank(cur))
            cur = _apply(h, cur, n)
        ranks.append(row)

    def strings_ending(s: int, k: int) -> int:
        t = (s + k) % n
        return ranks[t][k] - ranks[t][k + 1]

    counts: dict[ModuleLabel, int] = {}
    for s in range(n):
        for l in range(1, n + 1):
            m = strings_ending(s, l - 1) - (strings_ending(s, l) if l < n else 0)
            if m < 0:
                raise InvalidRepresentationError("inconsistent rank data")
            if m:
                counts[ModuleLabel(l, (s + l - 1) % n)] = m
    result = ModuleMultiset(n, counts)
    if result.dimension != d:
        raise InvalidRepresentationError(
            f"decomposition accounts for {result.dimension} of {d} dimensions"
        )
    return result


def _hstack(a: Matrix, b: Matrix) -> Matrix:
    if not a or not a[0]:
        return b
    if not b or not b[0]:
        return a
    return [ra + rb for ra, rb in zip(a, b)]


def tensor_decompose(n: int, left: ModuleLabel, right: ModuleLabel) -> ModuleMultiset:
    """decompose(M(left) (x) M(right)) computed from matrices."""
    return decompose(tensor_reps(build_rep(n, left), build_rep(n, right)))


def rebuild(multiset: ModuleMultiset) -> MatrixRep:
    """The direct sum realizing a multiset, in canonical label order."""
    n = multiset.order
    rep = zero_rep(n)
    for label, m in multiset.counts.items():
        for _ in range(m):
            rep = direct_sum(rep, build_rep(n, label)) if rep.dimension else build_rep(n, label)
    return rep
