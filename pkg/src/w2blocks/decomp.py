"""Closed-formula v-decomposition numbers of weight-2 blocks and everything derived
from them: D, E, Cartan matrices, Ext-quivers and Weyl-module layers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .abacus import as_partition, conjugate, is_e_regular, relative_sign, strictly_dominates
from .blocks import BlockId, chain_successor, classify, enumerate_block
from .errors import InvalidArgument, Unsupported
from .matrix import LabeledMatrix, invert_unitriangular
from .vpoly import VPoly

ONE = VPoly(1)
V1 = VPoly.monomial(1)
V2 = VPoly.monomial(2)
ZERO = VPoly()


def _require(B: BlockId, p: int | None = None):
    if B.weight != 2:
        raise Unsupported(f"closed formulas need weight 2, got {B.weight}")
    if p == 2:
        raise Unsupported("characteristic 2 is outside the weight-2 theory (p != 2 required)")
    if p is not None and p < 0:
        raise InvalidArgument(f"characteristic must be 0 or a prime, got {p}")


def d_poly(lam, mu, B: BlockId) -> VPoly:
    lam, mu = as_partition(lam), as_partition(mu)
    _require(B)
    for x in (lam, mu):
        if not B.contains(x):
            raise InvalidArgument(f"{list(x)} is not in block {B}")
    return _d_poly(lam, mu, B)


@lru_cache(maxsize=None)
def _d_poly(lam, mu, B: BlockId) -> VPoly:
    if lam == mu:
        return ONE
    regular = is_e_regular(mu, B.e)
    succ = chain_successor(mu, B) if regular else None
    if regular and lam == succ:
        return V2
    if not strictly_dominates(mu, lam):
        return ZERO
    if abs(classify(lam, B).partial - classify(mu, B).partial) != 1:
        return ZERO
    if regular and not strictly_dominates(lam, succ):
        return ZERO
    return V1


@lru_cache(maxsize=None)
def decomposition_matrix_v(B: BlockId) -> LabeledMatrix:
    _require(B)
    parts = enumerate_block(B)
    return LabeledMatrix(parts, parts, [[_d_poly(l, m, B) for m in parts] for l in parts])


@lru_cache(maxsize=None)
def decomposition_matrix(B: BlockId, p: int = 0) -> LabeledMatrix:
    """Integer decomposition matrix; identical for every p != 2."""
    _require(B, p)
    return decomposition_matrix_v(B).map(VPoly.at_one)


@lru_cache(maxsize=None)
def inverse_decomposition_matrix(B: BlockId, p: int = 0) -> LabeledMatrix:
    return invert_unitriangular(decomposition_matrix(B, p))


@lru_cache(maxsize=None)
def e_poly_matrix(B: BlockId) -> LabeledMatrix:
    """e_{lam mu}(v) = F_{lam' mu'}(-v), where F inverts the v-decomposition matrix of B'."""
    _require(B)
    Bc = B.conjugate()
    F = invert_unitriangular(decomposition_matrix_v(Bc))
    parts = enumerate_block(B)
    entries = [
        [VPoly.coerce(F[conjugate(l), conjugate(m)]).negate_variable() for m in parts]
        for l in parts
    ]
    return LabeledMatrix(parts, parts, entries)


@lru_cache(maxsize=None)
def cartan_matrix(B: BlockId, p: int = 0) -> LabeledMatrix:
    D = decomposition_matrix(B, p)
    return D.transpose() @ D


@dataclass(frozen=True)
class QuiverGraph:
    vertices: tuple
    edges: tuple  # (lam, mu) with lam lexicographically above mu

    def to_dot(self) -> str:
        lines = ["graph ext_quiver {"]
        lines += [f'  "{v}";' for v in self.vertices]
        lines += [f'  "{a}" -- "{b}";' for a, b in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "edges": [[list(a), list(b)] for a, b in self.edges],
        }

    def neighbours(self, lam) -> list:
        lam = as_partition(lam)
        return [b if a == lam else a for a, b in self.edges if lam in (a, b)]


@lru_cache(maxsize=None)
def ext_quiver(B: BlockId) -> QuiverGraph:
    Dv = decomposition_matrix_v(B)
    parts = Dv.rows
    edges = []
    for i, mu in enumerate(parts):
        for lam in parts[i + 1:]:
            if Dv[lam, mu] == V1 or Dv[mu, lam] == V1:
                edges.append((mu, lam))
    return QuiverGraph(parts, tuple(edges))


def weyl_layers(lam, B: BlockId) -> dict[int, list]:
    """Degree k -> composition factors mu of the Weyl module with d_{lam mu}(v) = v^k."""
    lam = as_partition(lam)
    layers: dict[int, list] = {}
    for mu, d in decomposition_matrix_v(B).row(lam).items():
        if d:
            layers.setdefault(d.degree, []).append(mu)
    return dict(sorted(layers.items()))


@dataclass(frozen=True)
class CompositionStats:
    partial: int
    counts: tuple  # counts[i] = factors with partial value i
    length: int
    zero_colours: tuple  # colours of the partial-0 factors, in row order

    def to_json(self) -> dict:
        return {"partial": self.partial, "counts": list(self.counts), "length": self.length,
                "zero_colours": list(self.zero_colours)}


def composition_stats(lam, B: BlockId) -> CompositionStats:
    lam = as_partition(lam)
    counts = [0] * B.e
    colours = []
    for mu, d in decomposition_matrix(B).row(lam).items():
        if d:
            lab = classify(mu, B)
            counts[lab.partial] += 1
            if lab.partial == 0:
                colours.append(lab.colour)
    return CompositionStats(classify(lam, B).partial, tuple(counts), sum(counts), tuple(colours))


def sign_classes(B: BlockId) -> dict[int, list]:
    out: dict[int, list] = {1: [], -1: []}
    for lam in enumerate_block(B):
        out[relative_sign(lam, B.e)].append(lam)
    return out
