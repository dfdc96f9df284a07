"""Homology operations on ambient elements.

Implements the Araki-Kudo operation Q (linear, Cartan formula
Q(xy) = x^2 Qy + Qx y^2, with Q(g) = Qg, Q(g^-1) = g^-4 Qg and
Q(Q^i g) = Q^{i+1} g), the diagonal coproduct (an algebra map with
psi(g^a) = g^a (x) g^a and psi(Q^i g) = g^{2^i} (x) Q^i g + Q^i g (x) g^{2^i}),
and the dual Steenrod operations Sq_j^*.

Per-monomial results are memoized in write-once caches; entries are never
mutated after insertion, so concurrent readers are safe.
"""

from __future__ import annotations

from .ambient import (
    ZERO,
    AmbientElement,
    AmbientMonomial,
    GeneratorLimitError,
    TensorElement,
    element,
    monomial,
    q_gen,
)

DEFAULT_MAX_GEN = 32

_Q_CACHE: dict[AmbientMonomial, AmbientElement] = {}
_PSI_CACHE: dict[AmbientMonomial, TensorElement] = {}
_SQJ_CACHE: dict[tuple[AmbientMonomial, int], AmbientElement] = {}


def _q_of_g_power(a: int) -> AmbientElement:
    # Closed form, validated against the recursive Cartan splitting in tests:
    # Q(g^a) = g^{2(a-1)} Qg for odd a and 0 for even a (squares die).
    if a & 1 == 0:
        return ZERO
    return element(monomial(2 * (a - 1), {1: 1}))


def _q_of_q_power(i: int, e: int) -> AmbientElement:
    if e & 1 == 0:
        return ZERO
    return element(monomial(0, {i: 2 * (e - 1), i + 1: 1}) if e > 1 else q_gen(i + 1))


def _q_monomial(m: AmbientMonomial) -> AmbientElement:
    """Cartan recursion, splitting off the leading generator power."""
    cached = _Q_CACHE.get(m)
    if cached is not None:
        return cached
    if m.g_exp != 0:
        head = monomial(m.g_exp)
        rest = AmbientMonomial(0, m.q_exps)
        q_head = _q_of_g_power(m.g_exp)
    elif m.q_exps:
        (i, e) = m.q_exps[0]
        head = monomial(0, {i: e})
        rest = AmbientMonomial(0, m.q_exps[1:])
        q_head = _q_of_q_power(i, e)
    else:
        _Q_CACHE[m] = ZERO
        return ZERO
    if rest.g_exp == 0 and not rest.q_exps:
        out = q_head
    else:
        out = element(head * head) * _q_monomial(rest) + q_head * element(rest * rest)
    _Q_CACHE[m] = out
    return out


def araki_kudo_q(e: AmbientElement, *, max_gen: int = DEFAULT_MAX_GEN) -> AmbientElement:
    """Apply Q linearly over F2; doubles weight and sends dimension d to 2d+1."""
    out = ZERO
    for m in e.terms:
        out = out + _q_monomial(m)
    if out.max_q_index > max_gen:
        raise GeneratorLimitError(
            f"operation produced generator index {out.max_q_index} > max_gen={max_gen}"
        )
    return out


def iterated_q(e: AmbientElement, n: int, *, max_gen: int = DEFAULT_MAX_GEN) -> AmbientElement:
    """Q applied n times."""
    for _ in range(n):
        e = araki_kudo_q(e, max_gen=max_gen)
    return e


def _psi_monomial(m: AmbientMonomial) -> TensorElement:
    cached = _PSI_CACHE.get(m)
    if cached is not None:
        return cached
    g_part = monomial(m.g_exp)
    out = TensorElement(frozenset({(g_part, g_part)}))
    for i, e in m.q_exps:
        gen = q_gen(i)
        twist = monomial(1 << i)
        pair = TensorElement(frozenset({(twist, gen), (gen, twist)}))
        out = out * pair ** e
    _PSI_CACHE[m] = out
    return out


def coproduct(e: AmbientElement) -> TensorElement:
    """The diagonal coproduct, linear over F2 and multiplicative on monomials."""
    out = TensorElement()
    for m in e.terms:
        out = out + _psi_monomial(m)
    return out


def _sq1_monomial(m: AmbientMonomial) -> AmbientElement:
    # Derivation: hit one factor at a time; Sq_1^*(Q^i g) = (Q^{i-1} g)^2 for
    # i >= 2 and zero on g and Qg, so only odd powers of Q^i g, i >= 2 survive.
    out = ZERO
    for i, e in m.q_exps:
        if i >= 2 and e & 1:
            exps = dict(m.q_exps)
            exps[i] = e - 1
            exps[i - 1] = exps.get(i - 1, 0) + 2
            out = out + element(monomial(m.g_exp, exps))
    return out


def sq1_dual(e: AmbientElement) -> AmbientElement:
    """The dual of the first Steenrod square; preserves weight, lowers dim by 1."""
    out = ZERO
    for m in e.terms:
        out = out + _sq1_monomial(m)
    return out


def _sqj_monomial(m: AmbientMonomial, j: int) -> AmbientElement:
    if j == 0:
        return element(m)
    if m.dim < j:
        return ZERO
    if j == 1:
        return _sq1_monomial(m)
    cached = _SQJ_CACHE.get((m, j))
    if cached is not None:
        return cached
    # Peel one copy of the first polynomial generator and apply the dual
    # Cartan rule; on a single generator only Sq_0^* and Sq_1^* are nonzero.
    (i, e) = m.q_exps[0]
    exps = dict(m.q_exps)
    if e == 1:
        del exps[i]
    else:
        exps[i] = e - 1
    rest = monomial(m.g_exp, exps)
    out = element(q_gen(i)) * _sqj_monomial(rest, j)
    if i >= 2:
        out = out + element(monomial(0, {i - 1: 2})) * _sqj_monomial(rest, j - 1)
    _SQJ_CACHE[(m, j)] = out
    return out


def sqj_dual(e: AmbientElement, j: int) -> AmbientElement:
    """The dual of Sq^j, extended to products by the dual Cartan rule.

    Generator values vanish for j >= 2; j = 1 delegates to ``sq1_dual``.
    """
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    if j == 1:
        return sq1_dual(e)
    out = ZERO
    for m in e.terms:
        out = out + _sqj_monomial(m, j)
    return out
