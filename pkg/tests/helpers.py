"""Independent oracles and random generators shared by the test modules.

The oracles deliberately avoid the code paths they check: the recursive
Cartan splitter peels one generator copy at a time instead of using closed
forms, the top-class support for the braid family comes from subset sums,
and the family-level structure constants are obtained by multiplying out
generator coproducts term by term with no elimination step.
"""

from __future__ import annotations

import random
from collections import Counter

from braidrat.ambient import (
    ZERO,
    AmbientElement,
    AmbientMonomial,
    element,
    monomial,
    q_gen,
)
from braidrat.coalgebra import _basis_by_dim
from braidrat.families import Family, FamilyMonomial, family_monomial

# ---------------------------------------------------------------------------
# Recursive Cartan splitting, one generator copy at a time.

_UNIT = monomial()


def q_recursive_monomial(m: AmbientMonomial) -> AmbientElement:
    if m == _UNIT:
        return ZERO
    if m == monomial(1):
        return element(q_gen(1))
    if m == monomial(-1):
        return element(monomial(-4, {1: 1}))
    if m.g_exp == 0 and len(m.q_exps) == 1 and m.q_exps[0][1] == 1:
        return element(q_gen(m.q_exps[0][0] + 1))
    if m.g_exp > 0:
        x = monomial(1)
        rest = monomial(m.g_exp - 1, dict(m.q_exps))
    elif m.g_exp < 0:
        x = monomial(-1)
        rest = monomial(m.g_exp + 1, dict(m.q_exps))
    else:
        i, e = m.q_exps[0]
        x = q_gen(i)
        exps = dict(m.q_exps)
        exps[i] = e - 1
        rest = monomial(0, exps)
    return (
        element(x * x) * q_recursive_element(element(rest))
        + q_recursive_monomial(x) * element(rest * rest)
    )


def q_recursive_element(e: AmbientElement) -> AmbientElement:
    out = ZERO
    for m in e.terms:
        out = out + q_recursive_monomial(m)
    return out


# ---------------------------------------------------------------------------
# Closed-form support of the braid top class: subset sums of generator dims.


def braid_top_support(k: int) -> frozenset[int]:
    dims = [(2 << j) - 1 for j in range(k.bit_length()) if (k >> j) & 1]
    sums = {0}
    for d in dims:
        sums |= {s + d for s in sums}
    return frozenset(sums)


# ---------------------------------------------------------------------------
# Family-level brute-force structure constants (no elimination).

FPair = tuple[FamilyMonomial, FamilyMonomial]


def _parity(items) -> frozenset:
    counts: Counter = Counter(items)
    return frozenset(x for x, c in counts.items() if c & 1)


def fpairs_mul(a: frozenset, b: frozenset) -> frozenset:
    return _parity((l1 * l2, r1 * r2) for l1, r1 in a for l2, r2 in b)


def fpairs_pow(a: frozenset, n: int) -> frozenset:
    unit = FamilyMonomial(next(iter(a))[0].family, ())
    out = frozenset({(unit, unit)})
    for _ in range(n):
        out = fpairs_mul(out, a)
    return out


def q_polynomial(i: int) -> frozenset[FamilyMonomial]:
    """The i-th ambient polynomial generator written in the rat family:
    Qg = g rho_0, and Q^{m+1}g = g^{2^m} rho_m + rho_0^{2^m} Q^m g for m >= 1."""
    if i == 0:
        return frozenset({FamilyMonomial(Family.RAT, ((-1, 1),))})
    poly = frozenset({FamilyMonomial(Family.RAT, ((-1, 1), (0, 1)))})
    for m in range(1, i):
        gpow = FamilyMonomial(Family.RAT, ((-1, 1 << m),))
        rho_m = FamilyMonomial(Family.RAT, ((m, 1),))
        rho0_pow = FamilyMonomial(Family.RAT, ((0, 1 << m),))
        poly = frozenset({rho0_pow * p for p in poly}) ^ frozenset({gpow * rho_m})
    return poly


def family_generator_coproduct(family: Family, idx: int) -> frozenset:
    unit = FamilyMonomial(family, ())
    gen = FamilyMonomial(family, ((idx, 1),))
    if family is Family.CONF:
        return frozenset({(unit, gen), (gen, unit)})
    if family is Family.BRAID:
        if idx == 0:
            return frozenset({(gen, gen)})
        gpow = FamilyMonomial(family, ((0, 1 << idx),))
        return frozenset({(gpow, gen), (gen, gpow)})
    if idx == -1:
        return frozenset({(gen, gen)})
    gpow = FamilyMonomial(family, ((-1, 1 << idx),))
    out = {(gpow, gen), (gen, gpow)}
    if idx == 0:
        return frozenset(out)
    rho0_pow = FamilyMonomial(family, ((0, 1 << idx),))
    for p in q_polynomial(idx):
        out.add((p, rho0_pow))
        out.add((rho0_pow, p))
    return frozenset(out)


def brute_force_delta(family: Family, k: int):
    """Structure constants shaped like GradedCoalgebra.delta, computed by
    direct family-level tensor expansion."""
    by_dim = _basis_by_dim(family, k)
    index = {fm: i for row in by_dim for i, fm in enumerate(row)}
    unit = FamilyMonomial(family, ())
    delta: dict[tuple[int, int], tuple[frozenset, ...]] = {}
    per_degree: dict[int, list[dict[int, set]]] = {}
    for d, row in enumerate(by_dim):
        per_degree[d] = []
        for fm in row:
            pairs = frozenset({(unit, unit)})
            for idx, e in fm.exps:
                pairs = fpairs_mul(pairs, fpairs_pow(family_generator_coproduct(family, idx), e))
            buckets: dict[int, set] = {}
            for left, right in pairs:
                buckets.setdefault(left.dim, set()).add((index[left], index[right]))
            per_degree[d].append(buckets)
    for d, row in enumerate(by_dim):
        for s in range(d + 1):
            delta[(d, s)] = tuple(
                frozenset(per_degree[d][a].get(s, set())) for a in range(len(row))
            )
    return delta


# ---------------------------------------------------------------------------
# Seeded random inputs of bounded size.


def random_monomial(rng: random.Random, *, max_g: int = 4, max_idx: int = 4,
                    max_factors: int = 2, max_exp: int = 3) -> AmbientMonomial:
    q = {}
    for _ in range(rng.randint(0, max_factors)):
        q[rng.randint(1, max_idx)] = rng.randint(1, max_exp)
    return monomial(rng.randint(-max_g, max_g), q)


def random_element(rng: random.Random, *, max_terms: int = 3, **kw) -> AmbientElement:
    out = ZERO
    for _ in range(rng.randint(0, max_terms)):
        out = out + element(random_monomial(rng, **kw))
    return out


def random_family_monomial(rng: random.Random) -> FamilyMonomial:
    family = rng.choice([Family.BRAID, Family.RAT])
    low = -1 if family is Family.RAT else 0
    exps = {}
    for _ in range(rng.randint(1, 3)):
        exps[rng.randint(low, 3)] = rng.randint(1, 2)
    return family_monomial(family, exps)
