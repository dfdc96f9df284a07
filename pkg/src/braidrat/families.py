"""Generator families for the three spaces and their weight-graded bases.

Three polynomial families embed into the ambient algebra:

* ``braid``  -- generators gamma_i = Q^i g for i >= 0 (gamma_0 = g), of
  weight 2**i and dimension 2**i - 1; the weight-k span models the homology
  of the k-strand braid classifying space.
* ``rat``    -- generators g and rho_i = Q^i(g^-1 Qg) for i >= 0, of weight
  2**i and dimension 2**(i+1) - 1; the weight-k span models the homology of
  the space of based degree-k rational self-maps of the sphere.
* ``conf``   -- generators c_i = Q^i(g^-2 Qg) for i >= 0, of weight 2**i and
  dimension 2**(i+1) - 1; the span of weight <= k models the homology of the
  length-<=-k labelled configuration space.

Family weight for ``conf`` counts configuration length; its ambient
embedding lands entirely in weight 0, so embeddings preserve dimension for
all families but weight only for ``braid`` and ``rat``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .ambient import AmbientElement, Bigrade, G_INV, element, monomial, q_gen
from .operations import DEFAULT_MAX_GEN, iterated_q

DEFAULT_K_BOUND = 1024


class Family(enum.Enum):
    BRAID = "braid"
    RAT = "rat"
    CONF = "conf"


def generator_bigrade(family: Family, idx: int) -> Bigrade:
    if family is Family.BRAID:
        if idx < 0:
            raise ValueError("braid generator index must be >= 0")
        return Bigrade(1 << idx, (1 << idx) - 1)
    if family is Family.RAT:
        if idx == -1:
            return Bigrade(1, 0)
        if idx < 0:
            raise ValueError("rat generator index must be >= -1")
        return Bigrade(1 << idx, (2 << idx) - 1)
    if idx < 0:
        raise ValueError("conf generator index must be >= 0")
    return Bigrade(1 << idx, (2 << idx) - 1)


def generator_label(family: Family, idx: int) -> str:
    if family is Family.BRAID:
        return "g" if idx == 0 else f"gamma_{idx}"
    if family is Family.RAT:
        return "g" if idx == -1 else f"rho_{idx}"
    return f"c_{idx}"


@dataclass(frozen=True)
class FamilyMonomial:
    """A monomial in the abstract generators of one family, canonical form."""

    family: Family
    exps: tuple[tuple[int, int], ...] = ()

    @property
    def weight(self) -> int:
        return sum(generator_bigrade(self.family, i).weight * e for i, e in self.exps)

    @property
    def dim(self) -> int:
        return sum(generator_bigrade(self.family, i).dim * e for i, e in self.exps)

    @property
    def bigrade(self) -> Bigrade:
        return Bigrade(self.weight, self.dim)

    def __mul__(self, other: "FamilyMonomial") -> "FamilyMonomial":
        if not isinstance(other, FamilyMonomial):
            return NotImplemented
        if other.family is not self.family:
            raise ValueError("cannot multiply monomials from different families")
        merged = dict(self.exps)
        for i, e in other.exps:
            merged[i] = merged.get(i, 0) + e
        return FamilyMonomial(self.family, tuple(sorted(merged.items())))

    def label(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for idx, e in self.exps:
            name = generator_label(self.family, idx)
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "exps": {generator_label(self.family, i): e for i, e in self.exps},
        }

    def __str__(self) -> str:
        return self.label()


def family_monomial(family: Family, exps: Mapping[int, int]) -> FamilyMonomial:
    """Build a family monomial from an {index: exponent} map."""
    cleaned = {}
    for i, e in exps.items():
        generator_bigrade(family, i)  # validates the index
        if e < 0:
            raise ValueError(f"exponent must be >= 0, got {e}")
        if e:
            cleaned[i] = e
    return FamilyMonomial(family, tuple(sorted(cleaned.items())))


@lru_cache(maxsize=None)
def _generator_embedding(family: Family, idx: int, max_gen: int) -> AmbientElement:
    if family is Family.BRAID:
        return element(monomial(1) if idx == 0 else q_gen(idx))
    if family is Family.RAT:
        if idx == -1:
            return element(monomial(1))
        return iterated_q(element(G_INV * q_gen(1)), idx, max_gen=max_gen)
    return iterated_q(element(monomial(-2) * q_gen(1)), idx, max_gen=max_gen)


def embed(fm: FamilyMonomial, *, max_gen: int = DEFAULT_MAX_GEN) -> AmbientElement:
    """Multiplicative embedding of a family monomial into the ambient algebra."""
    out = element(monomial())
    for idx, e in fm.exps:
        out = out * _generator_embedding(fm.family, idx, max_gen) ** e
    return out


def _generator_indices(family: Family, k: int) -> list[int]:
    top = max(w for w in range(k.bit_length()) if (1 << w) <= k) if k >= 1 else -1
    idxs = list(range(top + 1))
    if family is Family.RAT:
        idxs = [-1] + idxs
    return idxs


def _exponent_vectors(weights: list[int], total: int, exact: bool) -> Iterator[tuple[int, ...]]:
    # Depth-first enumeration in ascending lexicographic order.
    def rec(pos: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if pos == len(weights):
            if remaining == 0 or not exact:
                yield ()
            return
        w = weights[pos]
        for e in range(remaining // w + 1):
            for rest in rec(pos + 1, remaining - e * w):
                yield (e,) + rest

    yield from rec(0, total)


def basis(family: Family, k: int, *, k_bound: int = DEFAULT_K_BOUND) -> list[FamilyMonomial]:
    """Monomials of weight exactly k (braid, rat) or weight <= k (conf).

    The list is sorted by dimension, then lexicographically on exponent
    vectors, so output order is deterministic.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > k_bound:
        raise ValueError(f"k={k} exceeds the enumeration bound {k_bound}")
    idxs = _generator_indices(family, k)
    weights = [generator_bigrade(family, i).weight for i in idxs]
    exact = family is not Family.CONF
    entries = []
    for vec in _exponent_vectors(weights, k, exact):
        fm = FamilyMonomial(family, tuple((i, e) for i, e in zip(idxs, vec) if e))
        entries.append((fm.dim, vec, fm))
    entries.sort(key=lambda t: (t[0], t[1]))
    return [fm for _, _, fm in entries]


def top_class(family: Family, k: int) -> FamilyMonomial:
    """The unique basis monomial of maximal dimension.

    For ``rat`` this is prod rho_j over the binary expansion k = sum 2^j; for
    ``braid`` the argument denotes the 2k-strand space and the top class is
    prod gamma_{j+1}.
    """
    if family is Family.CONF:
        raise ValueError("top_class is defined for the braid and rat families")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    bits = [j for j in range(k.bit_length()) if (k >> j) & 1]
    if family is Family.RAT:
        return FamilyMonomial(family, tuple((j, 1) for j in bits))
    return FamilyMonomial(family, tuple((j + 1, 1) for j in bits))


def poincare_vector(family: Family, k: int, *, k_bound: int = DEFAULT_K_BOUND) -> list[int]:
    """Number of basis monomials in each dimension, indexed 0..top."""
    dims = [fm.dim for fm in basis(family, k, k_bound=k_bound)]
    out = [0] * (max(dims) + 1)
    for d in dims:
        out[d] += 1
    return out
