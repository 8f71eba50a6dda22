"""Jantzen sum-formula coefficients and the decomposition-number oracle they give
on weight-2 blocks."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .abacus import Partition, as_partition, display, partition_of, strictly_dominates, up_moves
from .blocks import BlockId, enumerate_block
from .errors import InternalError, InvalidArgument, Unsupported
from .matrix import LabeledMatrix


@dataclass(frozen=True)
class JantzenTerm:
    rho: Partition
    tau: Partition
    l_lambda_rho: int
    l_tau_rho: int
    h: int

    @property
    def sign(self) -> int:
        return -1 if (self.l_lambda_rho + self.l_tau_rho + 1) % 2 else 1

    def p_factor(self, p: int = 0) -> int:
        return 1 + p_valuation(self.h, p)


def p_valuation(x: int, p: int) -> int:
    """Exponent of p in x; identically 0 when p == 0."""
    if p == 0:
        return 0
    if p < 2 or x == 0:
        raise InvalidArgument(f"bad valuation request nu_{p}({x})")
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def arrow_pairs(lam, B: BlockId) -> tuple[JantzenTerm, ...]:
    """All (rho, tau) with lam ->rho tau, i.e. lam's bead a moves up to a - ie
    giving rho, then a bead of rho at b - ie moves down to a gap b > a."""
    return _arrow_pairs(as_partition(lam), B)


@lru_cache(maxsize=None)
def _arrow_pairs(lam: Partition, B: BlockId) -> tuple[JantzenTerm, ...]:
    d = display(lam, B.e, B.frame)
    e = B.e
    terms = []
    for move, rho_d in up_moves(d):
        a, i = move.source, move.steps
        rho = partition_of(rho_d)
        for q in sorted(rho_d.beads):
            b = q + i * e
            if b <= a or b in rho_d.beads:
                continue
            tau = partition_of(rho_d.move(q, b))
            if not strictly_dominates(tau, lam):
                raise InternalError(f"{list(tau)} does not dominate {list(lam)}")
            terms.append(JantzenTerm(rho, tau, move.leg, rho_d.occupied_between(q, b), i))
    return tuple(terms)


def jantzen_coefficient(lam, mu, B: BlockId, p: int, d_column) -> int:
    """J_{lam mu} given d_{tau mu} for every tau strictly dominating lam."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam == mu:
        raise InvalidArgument("J is defined for distinct partitions only")
    total = 0
    for t in arrow_pairs(lam, B):
        try:
            d = d_column[t.tau]
        except KeyError:
            raise InvalidArgument(f"d_column lacks an entry for {list(t.tau)}") from None
        if d:
            total += t.sign * t.p_factor(p) * d
    return total


def _check_oracle_args(B: BlockId, p: int):
    if B.weight != 2:
        raise Unsupported("the Jantzen oracle is only valid on weight-2 blocks")
    if p == 2:
        raise Unsupported("characteristic 2 is excluded (the weight-2 theory assumes p != 2)")


@lru_cache(maxsize=None)
def oracle_decomposition_matrix(B: BlockId, p: int = 0) -> LabeledMatrix:
    _check_oracle_args(B, p)
    parts = enumerate_block(B)
    columns = []
    for mu in parts:
        col = {}
        for lam in parts:  # descending lex: every tau > lam is already known
            if lam == mu:
                col[lam] = 1
                continue
            J = jantzen_coefficient(lam, mu, B, p, col)
            if J not in (0, 1, 2):
                raise InternalError(f"J_{{{lam},{mu}}} = {J} outside {{0,1,2}}")
            col[lam] = min(J, 1)
        columns.append(col)
    entries = [[columns[j][lam] for j in range(len(parts))] for lam in parts]
    return LabeledMatrix(parts, parts, entries)


@lru_cache(maxsize=None)
def jantzen_matrix(B: BlockId, p: int = 0) -> LabeledMatrix:
    """J^{e,p}_{lam mu} from the oracle columns; diagonal entries are 0 by convention."""
    D = oracle_decomposition_matrix(B, 0)
    parts = D.rows
    entries = []
    for lam in parts:
        row = []
        for mu in parts:
            row.append(0 if lam == mu else jantzen_coefficient(lam, mu, B, p, D.column(mu)))
        entries.append(row)
    return LabeledMatrix(parts, parts, entries)
