"""Indecomposable H_n(q)-modules M(l, r) as explicit matrix representations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .cyclotomic import CycloNum
from .errors import InvalidArgumentError, InvalidOrderError, InvalidRepresentationError
from .linalg import Matrix
from .taft import TaftElement, q_powers

__all__ = [
    "ModuleLabel",
    "MatrixRep",
    "build_rep",
    "socle_head",
    "matrix_socle_head",
    "loewy_length",
    "classify",
    "enumerate_labels",
    "regular_rep",
]


@dataclass(frozen=True, order=True)
class ModuleLabel:
    """Isomorphism class M(l, r): length ``l`` and head twist ``r`` (mod n)."""

    l: int
    r: int

    @classmethod
    def of(cls, n: int, l: int, r: int) -> ModuleLabel:
        if not isinstance(n, int) or n < 2:
            raise InvalidOrderError(f"need n >= 2, got {n!r}")
        if not isinstance(l, int) or not 1 <= l <= n:
            raise InvalidArgumentError(f"module length must lie in [1, {n}], got {l!r}")
        return cls(l, r % n)

    @classmethod
    def parse(cls, n: int, text: str) -> ModuleLabel:
        """Parse ``"l,r"``; negative twists are accepted and reduced."""
        parts = text.replace(" ", "").split(",")
        if len(parts) != 2:
            raise InvalidArgumentError(f"label must look like 'l,r', got {text!r}")
        try:
            l, r = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidArgumentError(f"label must look like 'l,r', got {text!r}") from None
        return cls.of(n, l, r)

    def validate(self, n: int) -> None:
        if not (1 <= self.l <= n and 0 <= self.r < n):
            raise InvalidArgumentError(f"{self} is not a canonical label for n={n}")

    def __str__(self) -> str:
        return f"M({self.l},{self.r})"


@dataclass(frozen=True)
class MatrixRep:
    """A module given by the matrices of g and h in some basis."""

    order: int
    g_matrix: Matrix
    h_matrix: Matrix

    @property
    def dimension(self) -> int:
        return len(self.g_matrix)

    def relation_failures(self) -> list[str]:
        """Names of the defining relations the matrices violate."""
        n, d = self.order, self.dimension
        failures = []
        ident = linalg.identity(n, d)
        if not linalg.equal(linalg.matpow(self.g_matrix, n, n), ident):
            failures.append("g^n = 1")
        if not linalg.is_zero_matrix(linalg.matpow(self.h_matrix, n, n)):
            failures.append("h^n = 0")
        hg = linalg.matmul(self.h_matrix, self.g_matrix, n)
        qgh = linalg.scale(linalg.matmul(self.g_matrix, self.h_matrix, n), q_powers(n)[1])
        if not linalg.equal(hg, qgh):
            failures.append("hg = qgh")
        return failures

    def satisfies_relations(self) -> bool:
        return not self.relation_failures()

    def act(self, a: TaftElement) -> Matrix:
        """Matrix of an arbitrary algebra element, sum c_ij g^i h^j."""
        if a.order != self.order:
            raise InvalidArgumentError("element and module have different orders")
        n, d = self.order, self.dimension
        g_pows = [linalg.identity(n, d)]
        h_pows = [linalg.identity(n, d)]
        for _ in range(n - 1):
            g_pows.append(linalg.matmul(g_pows[-1], self.g_matrix, n))
            h_pows.append(linalg.matmul(h_pows[-1], self.h_matrix, n))
        total = linalg.zeros(n, d, d)
        for (i, j), c in a.coeffs.items():
            term = linalg.matmul(g_pows[i], h_pows[j], n)
            total = linalg.matadd(total, linalg.scale(term, c))
        return total

    def to_json(self) -> dict:
        return {
            "n": self.order,
            "dimension": self.dimension,
            "g": [[x.to_json() for x in row] for row in self.g_matrix],
            "h": [[x.to_json() for x in row] for row in self.h_matrix],
        }


def build_rep(n: int, label: ModuleLabel) -> MatrixRep:
    """rho_{l,i}: g -> diag(q^i, q^(i-1), ..., q^(i-l+1)), h -> ones on the subdiagonal."""
    label = ModuleLabel.of(n, label.l, label.r)
    return _build_rep(n, label.l, label.r)


@lru_cache(maxsize=None)
def _build_rep(n: int, l: int, i: int) -> MatrixRep:
    qp = q_powers(n)
    one = CycloNum.one(n)
    g = linalg.zeros(n, l, l)
    h = linalg.zeros(n, l, l)
    for j in range(l):
        g[j][j] = qp[(i - j) % n]
        if j + 1 < l:
            h[j + 1][j] = one
    return MatrixRep(n, g, h)


def socle_head(n: int, label: ModuleLabel) -> tuple[int, int]:
    """(socle residue, head residue) = (i - l + 1, i) mod n."""
    label = ModuleLabel.of(n, label.l, label.r)
    return (label.r - label.l + 1) % n, label.r


def _eigen_residue(rep: MatrixRep, vec: list[CycloNum]) -> int:
    """The residue k with g v = q^k v, for a g-eigenvector v."""
    n = rep.order
    gv = [sum((row[c] * vec[c] for c in range(len(vec)) if row[c] and vec[c]),
              CycloNum.zero(n)) for row in rep.g_matrix]
    pivot = next(idx for idx, x in enumerate(vec) if x)
    ratio = gv[pivot] / vec[pivot]
    for k, qk in enumerate(q_powers(n)):
        if ratio == qk and all(gx == qk * x for gx, x in zip(gv, vec)):
            return k
    raise InvalidRepresentationError("vector is not a g-eigenvector")


def matrix_socle_head(rep: MatrixRep) -> tuple[int, int]:
    """Socle and head residues read off the matrices of an indecomposable.

    The socle is ker h (one-dimensional for M(l, i)); the head is the
    cokernel of h, detected as the g-eigenvector outside im h.
    """
    n, d = rep.order, rep.dimension
    h = rep.h_matrix
    kernel = kernel_basis(h, n)
    if len(kernel) != 1:
        raise InvalidRepresentationError("socle is not simple")
    image = linalg.column_space(h)
    image_rank = linalg.columns(image)
    head = None
    for k in range(d):
        e = [CycloNum.one(n) if t == k else CycloNum.zero(n) for t in range(d)]
        stacked = [row + [x] for row, x in zip(image, e)]
        if linalg.rank(stacked) > image_rank:
            try:
                head = _eigen_residue(rep, e)
            except InvalidRepresentationError:
                continue
            break
    if head is None:
        raise InvalidRepresentationError("could not locate head vector")
    return _eigen_residue(rep, kernel[0]), head


def kernel_basis(a: Matrix, n: int) -> list[list[CycloNum]]:
    """Basis of the null space of ``a``, by back substitution on its echelon form."""
    cols = linalg.columns(a)
    ech = linalg.row_echelon(a)
    pivots = []
    for row in ech:
        pivots.append(next(idx for idx, x in enumerate(row) if x))
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    zero, one = CycloNum.zero(n), CycloNum.one(n)
    for f in free:
        vec = [zero] * cols
        vec[f] = one
        # back substitution, bottom row first
        for row, p in reversed(list(zip(ech, pivots))):
            s = zero
            for c in range(p + 1, cols):
                if row[c] and vec[c]:
                    s = s + row[c] * vec[c]
            vec[p] = -s / row[p]
        basis.append(vec)
    return basis


def loewy_length(rep: MatrixRep) -> int:
    """Smallest s with h^s = 0 on the module."""
    n, d = rep.order, rep.dimension
    power = linalg.identity(n, d)
    for s in range(max(d, n) + 1):
        if linalg.is_zero_matrix(power):
            return s
        power = linalg.matmul(power, rep.h_matrix, n)
    raise InvalidRepresentationError("h does not act nilpotently")


def classify(n: int, label: ModuleLabel) -> dict[str, bool]:
    label = ModuleLabel.of(n, label.l, label.r)
    return {
        "simple": label.l == 1,
        "projective": label.l == n,
        "injective": label.l == n,
    }


def enumerate_labels(n: int) -> list[ModuleLabel]:
    """All n^2 indecomposable classes, l ascending then r ascending."""
    if not isinstance(n, int) or n < 2:
        raise InvalidOrderError(f"need n >= 2, got {n!r}")
    return [ModuleLabel(l, r) for l in range(1, n + 1) for r in range(n)]


def regular_rep(n: int) -> MatrixRep:
    """Left regular module on the basis g^i h^j in (i, j) lexicographic order."""
    basis = TaftElement.basis(n)
    index = {(i, j): idx for idx, (i, j) in enumerate((i, j) for i in range(n) for j in range(n))}
    size = n * n

    def left_mult(x: TaftElement) -> Matrix:
        m = linalg.zeros(n, size, size)
        for col, b in enumerate(basis):
            for mono, c in (x * b).coeffs.items():
                m[index[mono]][col] = c
        return m

    return MatrixRep(n, left_mult(TaftElement.g(n)), left_mult(TaftElement.h(n)))


def radical_power_dimension(rep: MatrixRep, s: int) -> int:
    """dim rad^s(M) = dim h^s M."""
    return linalg.rank(linalg.matpow(rep.h_matrix, s, rep.order))
