"""Verification suites shared by the CLI ``verify`` command.

Each suite returns a list of :class:`Check` records.  A failed check carries
the first counterexample found, serialized to JSON-friendly data.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .green import (
    GreenElement,
    basis_product,
    dimension_character,
    generator_a,
    generator_x,
    green_mul,
    u_sequence,
)
from .modules import (
    ModuleLabel,
    build_rep,
    classify,
    enumerate_labels,
    loewy_length,
    matrix_socle_head,
    radical_power_dimension,
    regular_rep,
    socle_head,
)
from .oracle import ModuleMultiset, decompose, tensor_decompose
from .presentation import (
    fib_poly,
    fib_poly_closed,
    integer_determinant,
    normal_form,
    phi,
    phi_matrix,
    presentation_relations,
    psi,
    standard_fib,
)
from .taft import (
    TaftElement,
    antipode,
    coproduct,
    counit,
    idempotent,
    ideal_power_dimension,
    q_powers,
)

log = logging.getLogger(__name__)

SUITES = ("hopf", "reps", "oracle", "ring", "iso", "fib")


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    counterexample: dict | None = field(default=None)

    def to_json(self) -> dict:
        out = {"suite": self.suite, "name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _first_failure(items, predicate: Callable) -> object | None:
    for item in items:
        if not predicate(item):
            return item
    return None


def _label_json(label: ModuleLabel) -> dict:
    return {"l": label.l, "r": label.r}


# -- hopf ----------------------------------------------------------------------


def hopf_suite(n: int) -> list[Check]:
    basis = TaftElement.basis(n)
    one = TaftElement.one(n)
    checks = []

    def mono(m):
        return TaftElement.monomial(n, *m)

    def delta_leg(m):
        return coproduct(mono(m))

    def eps_leg(m):
        return counit(mono(m))

    def s_leg(m):
        return antipode(mono(m))

    def coassoc(b):
        d = coproduct(b)
        return d.map_leg(0, delta_leg) == d.map_leg(1, delta_leg)

    def counital(b):
        d = coproduct(b)
        return d.map_leg(0, eps_leg).as_element() == b and d.map_leg(1, eps_leg).as_element() == b

    def antipode_ok(b):
        d = coproduct(b)
        unit = one.scale(counit(b))
        return (
            d.map_leg(0, s_leg).multiply_legs() == unit
            and d.map_leg(1, s_leg).multiply_legs() == unit
        )

    def monomial_json(b):
        (i, j), = b.coeffs
        return {"g": i, "h": j}

    for name, pred in (
        ("coassociativity", coassoc),
        ("counit axiom", counital),
        ("antipode axiom", antipode_ok),
    ):
        bad = _first_failure(basis, pred)
        checks.append(Check("hopf", name, bad is None,
                            counterexample=None if bad is None else monomial_json(bad)))

    pairs = [(a, b) for a in basis for b in basis]
    bad = _first_failure(pairs, lambda p: coproduct(p[0] * p[1]) == coproduct(p[0]) * coproduct(p[1]))
    checks.append(Check("hopf", "coproduct is an algebra map", bad is None,
                        counterexample=None if bad is None else {"a": monomial_json(bad[0]), "b": monomial_json(bad[1])}))
    bad = _first_failure(pairs, lambda p: counit(p[0] * p[1]) == counit(p[0]) * counit(p[1]))
    checks.append(Check("hopf", "counit is an algebra map", bad is None,
                        counterexample=None if bad is None else {"a": monomial_json(bad[0]), "b": monomial_json(bad[1])}))
    bad = _first_failure(pairs, lambda p: antipode(p[0] * p[1]) == antipode(p[1]) * antipode(p[0]))
    checks.append(Check("hopf", "antipode is an anti-algebra map", bad is None,
                        counterexample=None if bad is None else {"a": monomial_json(bad[0]), "b": monomial_json(bad[1])}))

    g, h = TaftElement.g(n), TaftElement.h(n)
    checks.append(Check("hopf", "defining relations", g**n == one and (h**n).is_zero()
                        and h * g == (g * h).scale(q_powers(n)[1])))
    checks.append(Check("hopf", "dimension n^2", len(basis) == n * n))
    checks.append(Check("hopf", "radical nilpotency (h)^(n-1) != 0, (h)^n = 0",
                        ideal_power_dimension(n, n - 1) > 0 and ideal_power_dimension(n, n) == 0))

    es = [idempotent(n, i) for i in range(n)]
    orth = all(es[i] * es[j] == (es[i] if i == j else TaftElement.zero(n))
               for i in range(n) for j in range(n))
    total = TaftElement.zero(n)
    for e in es:
        total = total + e
    eig = all(g * es[i] == es[i].scale(q_powers(n)[i]) and not (h ** (n - 1) * es[i]).is_zero()
              for i in range(n))
    checks.append(Check("hopf", "orthogonal idempotents summing to 1", orth and total == one and eig))
    return checks


# -- reps ----------------------------------------------------------------------


def reps_suite(n: int) -> list[Check]:
    labels = enumerate_labels(n)
    checks = []
    bad = _first_failure(labels, lambda lab: build_rep(n, lab).satisfies_relations())
    checks.append(Check("reps", "build_rep satisfies relations", bad is None,
                        counterexample=None if bad is None else _label_json(bad)))
    bad = _first_failure(labels, lambda lab: loewy_length(build_rep(n, lab)) == lab.l)
    checks.append(Check("reps", "loewy length equals l", bad is None,
                        counterexample=None if bad is None else _label_json(bad)))
    bad = _first_failure(
        labels,
        lambda lab: matrix_socle_head(build_rep(n, lab)) == socle_head(n, lab)
        == ((lab.r - lab.l + 1) % n, lab.r),
    )
    checks.append(Check("reps", "socle/head residues", bad is None,
                        counterexample=None if bad is None else _label_json(bad)))
    bad = _first_failure(
        labels,
        lambda lab: classify(n, lab)
        == {"simple": lab.l == 1, "projective": lab.l == n, "injective": lab.l == n},
    )
    checks.append(Check("reps", "classification flags", bad is None,
                        counterexample=None if bad is None else _label_json(bad)))
    bad = _first_failure(
        labels,
        lambda lab: all(
            radical_power_dimension(build_rep(n, lab), s) == max(lab.l - s, 0)
            for s in range(1, n + 1)
        ),
    )
    checks.append(Check("reps", "rad^s dimensions", bad is None,
                        counterexample=None if bad is None else _label_json(bad)))
    bad = _first_failure(labels, lambda lab: decompose(build_rep(n, lab)).counts == {lab: 1})
    checks.append(Check("reps", "indecomposables decompose to themselves", bad is None,
                        counterexample=None if bad is None else _label_json(bad)))
    checks.append(Check("reps", "enumeration has n^2 labels", len(labels) == n * n))
    reg = regular_rep(n)
    expected = ModuleMultiset(n, {ModuleLabel(n, i): 1 for i in range(n)})
    got = decompose(reg)
    checks.append(Check("reps", "regular module is the sum of M(n, i)",
                        got == expected and reg.satisfies_relations() and loewy_length(reg) == n,
                        counterexample=None if got == expected else got.to_json()))
    return checks


# -- oracle --------------------------------------------------------------------


def _oracle_row(args: tuple[int, int, int]) -> list[tuple]:
    """Compare formula and matrices for one left label against every right label."""
    n, l, r = args
    left = ModuleLabel(l, r)
    rows = []
    for right in enumerate_labels(n):
        got = tensor_decompose(n, left, right)
        rows.append((right.l, right.r, tuple((k.l, k.r, m) for k, m in got.counts.items())))
    return rows


def oracle_table(n: int, jobs: int = 1) -> dict[tuple[ModuleLabel, ModuleLabel], ModuleMultiset]:
    labels = enumerate_labels(n)
    work = [(n, lab.l, lab.r) for lab in labels]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_oracle_row, work))
    else:
        results = [_oracle_row(w) for w in work]
    table = {}
    for lab, rows in zip(labels, results):
        for l2, r2, summands in rows:
            table[(lab, ModuleLabel(l2, r2))] = ModuleMultiset(
                n, {ModuleLabel(l, r): m for l, r, m in summands}
            )
    return table


def oracle_suite(n: int, jobs: int = 1) -> list[Check]:
    table = oracle_table(n, jobs)
    labels = enumerate_labels(n)
    checks = []
    mismatch = None
    for (a, b), got in table.items():
        want = basis_product(n, a, b)
        if GreenElement.from_multiset(got) != want:
            mismatch = {"left": _label_json(a), "right": _label_json(b),
                        "oracle": got.to_json(), "formula": want.to_json()}
            break
    checks.append(Check("oracle", "oracle equals formula on all pairs", mismatch is None,
                        detail=f"{len(table)} pairs", counterexample=mismatch))
    bad = _first_failure(table.items(), lambda kv: kv[1].dimension == kv[0][0].l * kv[0][1].l)
    checks.append(Check("oracle", "dimension conservation", bad is None,
                        counterexample=None if bad is None else {"left": _label_json(bad[0][0]), "right": _label_json(bad[0][1])}))
    bad = _first_failure(table, lambda key: table[key] == table[(key[1], key[0])])
    checks.append(Check("oracle", "commutativity of tensor products", bad is None,
                        counterexample=None if bad is None else {"left": _label_json(bad[0]), "right": _label_json(bad[1])}))
    nonproj = [(a, b) for a in labels for b in labels if a.l < n and b.l < n]
    bad = _first_failure(
        nonproj,
        lambda p: any(k.l == 1 for k in table[p].counts) == (p[0].l == p[1].l),
    )
    checks.append(Check("oracle", "simple summand iff equal lengths", bad is None,
                        counterexample=None if bad is None else {"left": _label_json(bad[0]), "right": _label_json(bad[1])}))
    return checks


# -- ring ----------------------------------------------------------------------


def ring_suite(n: int, triples: int = 1000, seed: int = 0) -> list[Check]:
    labels = enumerate_labels(n)
    basis = [GreenElement(n, {lab: 1}) for lab in labels]
    checks = []
    pairs = [(u, v) for u in basis for v in basis]
    bad = _first_failure(pairs, lambda p: green_mul(*p) == green_mul(p[1], p[0]))
    checks.append(Check("ring", "commutativity", bad is None,
                        counterexample=None if bad is None else {"u": bad[0].to_json(), "v": bad[1].to_json()}))
    rng = random.Random(seed)
    sample = [tuple(rng.choice(basis) for _ in range(3)) for _ in range(triples)]
    bad = _first_failure(sample, lambda t: (t[0] * t[1]) * t[2] == t[0] * (t[1] * t[2]))
    checks.append(Check("ring", "associativity", bad is None, detail=f"{triples} random triples",
                        counterexample=None if bad is None else {"u": bad[0].to_json(), "v": bad[1].to_json(), "w": bad[2].to_json()}))
    one = GreenElement.one(n)
    checks.append(Check("ring", "[S_0] is the unit", all(one * u == u for u in basis)))
    a, x = generator_a(n), generator_x(n)
    checks.append(Check("ring", "a^n = 1", a**n == one))
    bad = _first_failure(range(1, n + 1), lambda l: u_sequence(n, l) == GreenElement.basis(n, l, 0))
    checks.append(Check("ring", "u_l = [M(l,0)]", bad is None,
                        counterexample=None if bad is None else {"l": bad}))
    proj = GreenElement.basis(n, n, 0)
    checks.append(Check("ring", "x[M(n,0)] = (a+1)[M(n,0)]", x * proj == (a + one) * proj))
    checks.append(Check("ring", "(x-a-1)u_n = 0", ((x - a - one) * u_sequence(n, n)).is_zero()))
    bad = _first_failure(
        labels, lambda lab: GreenElement(n, {lab: 1}) == a ** ((n - lab.r) % n) * GreenElement.basis(n, lab.l, 0)
    )
    checks.append(Check("ring", "twist factoring [M(l,r)] = a^(n-r)[M(l,0)]", bad is None,
                        counterexample=None if bad is None else _label_json(bad)))
    bad = _first_failure(
        pairs, lambda p: dimension_character(p[0] * p[1]) == dimension_character(p[0]) * dimension_character(p[1])
    )
    checks.append(Check("ring", "dimension character is multiplicative", bad is None,
                        counterexample=None if bad is None else {"u": bad[0].to_json(), "v": bad[1].to_json()}))
    return checks


# -- iso -----------------------------------------------------------------------


def iso_suite(n: int) -> list[Check]:
    labels = enumerate_labels(n)
    basis = [GreenElement(n, {lab: 1}) for lab in labels]
    images = [phi(u) for u in basis]
    checks = []
    mismatch = None
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            if phi(green_mul(u, v)) != images[i] * images[j]:
                mismatch = {"u": u.to_json(), "v": v.to_json()}
                break
        if mismatch:
            break
    checks.append(Check("iso", "phi is multiplicative on all basis pairs", mismatch is None,
                        detail=f"{len(basis) ** 2} pairs", counterexample=mismatch))
    bad = _first_failure(range(len(basis)), lambda k: psi(images[k]) == basis[k])
    checks.append(Check("iso", "psi o phi = id", bad is None,
                        counterexample=None if bad is None else basis[bad].to_json()))
    det = integer_determinant(phi_matrix(n))
    checks.append(Check("iso", "basis change is unimodular", abs(det) == 1, detail=f"det = {det}"))
    _, rel = presentation_relations(n)
    checks.append(Check("iso", "(z-y-1) f_n reduces to 0", normal_form(rel, n).is_zero()))
    y_rel, _ = presentation_relations(n)
    checks.append(Check("iso", "y^n - 1 reduces to 0", normal_form(y_rel, n).is_zero()))
    return checks


# -- fib -----------------------------------------------------------------------


def fib_suite(n: int, upto: int = 64) -> list[Check]:
    checks = []
    bad = _first_failure(range(1, upto + 1), lambda m: fib_poly(m) == fib_poly_closed(m))
    checks.append(Check("fib", f"recursive equals closed form for m <= {upto}", bad is None,
                        counterexample=None if bad is None else {"m": bad}))
    bad = _first_failure(
        range(1, upto + 1),
        lambda m: fib_poly(m).z_degree() == m - 1 and fib_poly(m).coeffs.get((0, m - 1)) == 1,
    )
    checks.append(Check("fib", "f_m monic in z of degree m-1", bad is None,
                        counterexample=None if bad is None else {"m": bad}))
    bad = _first_failure(range(1, upto + 1), lambda m: standard_fib(m) == fib_poly(m).substitute_y(-1))
    checks.append(Check("fib", "F_m(y, z) = f_m(-y, z)", bad is None,
                        counterexample=None if bad is None else {"m": bad}))
    return checks


def run_suites(n: int, suite: str = "all", jobs: int = 1) -> list[Check]:
    names = SUITES if suite == "all" else (suite,)
    runners = {
        "hopf": lambda: hopf_suite(n),
        "reps": lambda: reps_suite(n),
        "oracle": lambda: oracle_suite(n, jobs),
        "ring": lambda: ring_suite(n),
        "iso": lambda: iso_suite(n),
        "fib": lambda: fib_suite(n),
    }
    results = []
    for name in names:
        if name not in runners:
            raise ValueError(f"unknown suite {name!r}")
        log.info("running %s suite for n=%d", name, n)
        results.extend(runners[name]())
    return results

