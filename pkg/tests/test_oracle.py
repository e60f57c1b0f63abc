"""Tests for the matrix-level tensor/decomposition oracle.

Expected values for tensor products are cross-checked against a second,
ungraded computation: the Jordan type of h (block sizes, from ranks of h^k on
the whole space) together with the multiset of g-eigenvalue residues.  Those
two invariants pin down the lengths and the residue content of the summands.
"""

from collections import Counter

import pytest

from taftgreen import linalg
from taftgreen.errors import InvalidArgumentError, InvalidRepresentationError
from taftgreen.modules import MatrixRep, ModuleLabel, build_rep, enumerate_labels, regular_rep
from taftgreen.oracle import (
    ModuleMultiset,
    decompose,
    direct_sum,
    eigenspaces,
    rebuild,
    tensor_decompose,
    tensor_reps,
    zero_rep,
)
from taftgreen.taft import idempotent, q_powers

L = ModuleLabel


def jordan_type(rep):
    """Sizes of the nilpotent Jordan blocks of h, largest first."""
    n, d = rep.order, rep.dimension
    ranks = [d]
    power = linalg.identity(n, d)
    for _ in range(d):
        power = linalg.matmul(power, rep.h_matrix, n)
        ranks.append(linalg.rank(power))
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, d + 1)]
    sizes = []
    for k in range(d, 0, -1):
        exact = at_least[k - 1] - (at_least[k] if k < d else 0)
        sizes += [k] * exact
    return sorted(sizes, reverse=True)


def residues(rep):
    """Residues k of the diagonal g-eigenvalues q^k (g is diagonal for tensor products)."""
    q = q_powers(rep.order)
    out = Counter()
    for i in range(rep.dimension):
        out[q.index(rep.g_matrix[i][i])] += 1
    return out


def multiset_invariants(n, ms):
    sizes = sorted((lab.l for lab, m in ms.counts.items() for _ in range(m)), reverse=True)
    res = Counter()
    for lab, m in ms.counts.items():
        for k in range(lab.l):
            res[(lab.r - k) % n] += m
    return sizes, res


class TestTensorReps:
    def test_dimension(self):
        a, b = build_rep(5, L(3, 1)), build_rep(5, L(4, 2))
        assert tensor_reps(a, b).dimension == 12

    def test_relations_preserved(self):
        for n in (2, 3, 4):
            for a in enumerate_labels(n):
                for b in enumerate_labels(n):
                    assert tensor_reps(build_rep(n, a), build_rep(n, b)).satisfies_relations()

    def test_eigenvalues_add(self):
        n = 5
        t = tensor_reps(build_rep(n, L(2, 1)), build_rep(n, L(3, 3)))
        q = q_powers(n)
        for a in range(2):
            for b in range(3):
                idx = a * 3 + b
                assert t.g_matrix[idx][idx] == q[(1 - a + 3 - b) % n]

    def test_order_mismatch(self):
        with pytest.raises(InvalidArgumentError):
            tensor_reps(build_rep(3, L(1, 0)), build_rep(4, L(1, 0)))
        with pytest.raises(InvalidArgumentError):
            direct_sum(build_rep(3, L(1, 0)), build_rep(4, L(1, 0)))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_simple_factor_shifts_twist(self, n):
        for lab in enumerate_labels(n):
            for r2 in range(n):
                expected = {L(lab.l, (lab.r + r2) % n): 1}
                assert tensor_decompose(n, lab, L(1, r2)).counts == expected
                assert tensor_decompose(n, L(1, r2), lab).counts == expected


class TestDirectSum:
    def test_dimension_and_zero(self):
        a = build_rep(4, L(3, 2))
        assert direct_sum(a, build_rep(4, L(2, 0))).dimension == 5
        z = direct_sum(a, zero_rep(4))
        assert z.g_matrix == a.g_matrix and z.h_matrix == a.h_matrix

    def test_multiplicity_additive(self):
        rep = build_rep(4, L(3, 1))
        assert decompose(direct_sum(rep, rep)).counts == {L(3, 1): 2}

    def test_round_trip(self):
        ms = ModuleMultiset(5, {L(2, 1): 2, L(5, 0): 1, L(1, 4): 3})
        assert decompose(rebuild(ms)) == ms


class TestDecompose:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_indecomposables(self, n):
        for lab in enumerate_labels(n):
            assert decompose(build_rep(n, lab)).counts == {lab: 1}

    @pytest.mark.parametrize("n", range(2, 7))
    def test_regular(self, n):
        assert decompose(regular_rep(n)).counts == {L(n, i): 1 for i in range(n)}

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_x_times_projective(self, n):
        got = tensor_decompose(n, L(2, 0), L(n, 0))
        assert got.counts == {L(n, 0): 1, L(n, n - 1): 1}

    def test_n3_square_of_x(self):
        n = 3
        rep = tensor_reps(build_rep(n, L(2, 0)), build_rep(n, L(2, 0)))
        expected = ModuleMultiset(n, {L(1, 2): 1, L(3, 0): 1})
        assert (jordan_type(rep), residues(rep)) == multiset_invariants(n, expected)
        assert decompose(rep) == expected

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_agrees_with_jordan_type_and_character(self, n):
        for a in enumerate_labels(n):
            for b in enumerate_labels(n):
                rep = tensor_reps(build_rep(n, a), build_rep(n, b))
                got = decompose(rep)
                assert multiset_invariants(n, got) == (jordan_type(rep), residues(rep))

    def test_non_module_rejected(self):
        n = 3
        g = linalg.identity(n, 2)
        h = build_rep(n, L(2, 0)).h_matrix
        with pytest.raises(InvalidRepresentationError):
            decompose(MatrixRep(n, g, h))

    def test_zero_dimensional(self):
        assert decompose(zero_rep(4)).counts == {}

    def test_change_of_basis(self):
        # conjugate by P = I + N (N strictly upper triangular) so g is no longer diagonal
        n = 4
        rep = direct_sum(build_rep(n, L(3, 1)), build_rep(n, L(2, 0)))
        d = rep.dimension
        q = q_powers(n)[1]
        nil = linalg.zeros(n, d, d)
        for i in range(d - 1):
            nil[i][i + 1] = q
        p = linalg.matadd(linalg.identity(n, d), nil)
        # (I + N)^-1 = sum_k (-N)^k
        p_inv = linalg.identity(n, d)
        term = linalg.identity(n, d)
        for _ in range(1, d):
            term = linalg.scale(linalg.matmul(term, nil, n), -1)
            p_inv = linalg.matadd(p_inv, term)
        assert linalg.equal(linalg.matmul(p, p_inv, n), linalg.identity(n, d))
        conj = MatrixRep(
            n,
            linalg.matmul(linalg.matmul(p, rep.g_matrix, n), p_inv, n),
            linalg.matmul(linalg.matmul(p, rep.h_matrix, n), p_inv, n),
        )
        assert any(conj.g_matrix[i][j] for i in range(d) for j in range(d) if i != j)
        assert decompose(conj).counts == {L(3, 1): 1, L(2, 0): 1}


class TestEigenspaces:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_match_idempotent_images(self, n):
        rep = tensor_reps(build_rep(n, L(3, 1)), build_rep(n, L(2, n - 1)))
        spaces = eigenspaces(rep)
        for i in range(n):
            image = rep.act(idempotent(n, i))
            cols = linalg.column_space(image)
            assert linalg.columns(cols) == linalg.columns(spaces[i])
            if linalg.columns(cols):
                both = [ra + rb for ra, rb in zip(cols, spaces[i])]
                assert linalg.rank(both) == linalg.columns(cols)

    def test_h_lowers_residue(self):
        n = 4
        rep = regular_rep(n)
        spaces = eigenspaces(rep)
        q = q_powers(n)
        for t in range(n):
            image = linalg.matmul(rep.h_matrix, spaces[t], n)
            g_image = linalg.matmul(rep.g_matrix, image, n)
            assert linalg.equal(g_image, linalg.scale(image, q[(t - 1) % n]))


class TestModuleMultiset:
    def test_json(self):
        ms = ModuleMultiset(3, {L(3, 0): 1, L(1, 2): 1})
        assert ms.to_json() == {
            "n": 3,
            "summands": [{"l": 1, "r": 2, "mult": 1}, {"l": 3, "r": 0, "mult": 1}],
        }
        assert ms.dimension == 4

    def test_rejects_bad_labels(self):
        with pytest.raises(InvalidArgumentError):
            ModuleMultiset(3, {L(4, 0): 1})
        with pytest.raises(InvalidArgumentError):
            ModuleMultiset(3, {L(1, 3): 1})
