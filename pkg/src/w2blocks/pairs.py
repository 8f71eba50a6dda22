"""[w:k]-pairs of blocks, the bijection Phi between them, runner insertion,
Rouquier detection and chains of pairs ending at a Rouquier block."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .abacus import (
    AbacusDisplay,
    Partition,
    as_partition,
    display,
    dominates,
    e_core_and_weight,
    partition_of,
)
from .blocks import BlockId, classify, enumerate_block, partition_of_label
from .errors import InternalError, InvalidArgument, Unsupported
from .matrix import LabeledMatrix

EMPTY = "empty"
FULL = "full"


@dataclass(frozen=True)
class PairInfo:
    """B (upper, size n) and C (lower, size n - k) whose cores differ by swapping
    runners i-1 and i when displayed with frame_N beads."""

    B: BlockId
    C: BlockId
    i: int
    k: int
    frame_N: int
    exceptional_B: tuple | None = None
    exceptional_C: tuple | None = None

    @property
    def alpha(self) -> Partition:
        return self.exceptional_B[0]

    def to_json(self) -> dict:
        out = {
            "B": self.B.to_json(),
            "C": self.C.to_json(),
            "i": self.i,
            "k": self.k,
            "frame_N": self.frame_N,
        }
        if self.exceptional_B is not None:
            names = ("alpha", "beta", "gamma")
            out["exceptional_B"] = {n: list(x) for n, x in zip(names, self.exceptional_B)}
            out["exceptional_C"] = {n: list(x) for n, x in zip(names, self.exceptional_C)}
        return out


def runner_counts(core, e: int, N: int) -> list[int]:
    return display(core, e, N).runner_counts()


def _swap(lam, e: int, N: int, i: int) -> Partition:
    return partition_of(display(lam, e, N).swap_runners(i - 1))


def _open_beads_on(d: AbacusDisplay, runner: int, step: int) -> int:
    """Beads on ``runner`` whose neighbour position p + step is vacant (and on the abacus)."""
    return sum(
        1 for p in d.beads if p % d.e == runner and p + step >= 0 and p + step not in d.beads
    )


def _exceptional(block: BlockId, e: int, N: int, runner: int, step: int, k: int) -> tuple:
    found = [
        lam
        for lam in enumerate_block(block)
        if _open_beads_on(display(lam, e, N), runner, step) > k
    ]
    if len(found) != 3:
        raise InternalError(f"{len(found)} exceptional partitions in {block}, expected 3")
    found.sort(reverse=True)  # lex order; dominance chain checked below
    if not (dominates(found[0], found[1]) and dominates(found[1], found[2])):
        raise InternalError(f"exceptional partitions of {block} are not a dominance chain")
    return tuple(found)


def make_pair(B: BlockId, i: int, N: int) -> PairInfo:
    """The pair with upper block B, swapping runners i-1, i of B's core in an N-bead display."""
    e = B.e
    if not 1 <= i < e:
        raise InvalidArgument(f"runner index {i} outside 1..{e - 1}")
    counts = runner_counts(B.core, e, N)
    k = counts[i] - counts[i - 1]
    if k < 1:
        raise InvalidArgument(f"runner {i} does not carry more beads than runner {i - 1}")
    C = BlockId(e, _swap(B.core, e, N, i), B.weight)
    exB = exC = None
    if k == 1 and B.weight == 2:
        exB = _exceptional(B, e, N, i, -1, 1)
        exC = _exceptional(C, e, N, i - 1, +1, 1)
    return PairInfo(B, C, i, k, N, exB, exC)


def framings(B: BlockId) -> range:
    return range(B.frame, B.frame + B.e)


def find_pairs(B: BlockId, all_frames: bool = False) -> list[PairInfo]:
    """Pairs with B as the upper block, in the block frame (or every framing)."""
    frames = framings(B) if all_frames else [B.frame]
    out = []
    for N in frames:
        counts = runner_counts(B.core, B.e, N)
        for i in range(1, B.e):
            if counts[i] > counts[i - 1]:
                out.append(make_pair(B, i, N))
    return out


def find_lower_pairs(C: BlockId, all_frames: bool = False) -> list[PairInfo]:
    """Pairs with C as the lower block (C obtained from a larger block by a swap)."""
    frames = framings(C) if all_frames else [C.frame]
    out = []
    for N in frames:
        counts = runner_counts(C.core, C.e, N)
        for i in range(1, C.e):
            if counts[i - 1] > counts[i]:
                B = BlockId(C.e, _swap(C.core, C.e, N, i), C.weight)
                out.append(make_pair(B, i, N))
    return out


def is_exceptional(lam, P: PairInfo) -> bool:
    return P.exceptional_B is not None and as_partition(lam) in P.exceptional_B


def phi_by_swap(lam, P: PairInfo) -> Partition:
    return _swap(lam, P.B.e, P.frame_N, P.i)


def phi_by_labels(lam, P: PairInfo) -> Partition:
    lab = classify(lam, P.B)
    return partition_of_label(P.C, lab.a, lab.b)


def phi(lam, P: PairInfo) -> Partition:
    """Phi(lam), by label invariance, confirmed by the runner swap or the exceptional rule."""
    lam = as_partition(lam)
    if not P.B.contains(lam):
        raise InvalidArgument(f"{list(lam)} is not in {P.B}")
    if P.B.weight != 2:
        if P.k < P.B.weight:
            raise Unsupported("Phi for k < w is only implemented at weight 2")
        return phi_by_swap(lam, P)
    by_label = phi_by_labels(lam, P)
    if is_exceptional(lam, P):
        a, b, g = P.exceptional_B
        at, bt, gt = P.exceptional_C
        expected = {a: at, b: gt, g: bt}[lam]
    else:
        expected = phi_by_swap(lam, P)
    if by_label != expected:
        raise InternalError(
            f"Phi({list(lam)}) in {P.B}: labels give {list(by_label)}, structure gives {list(expected)}"
        )
    return by_label


@lru_cache(maxsize=None)
def phi_table(P: PairInfo) -> dict:
    table = {lam: phi(lam, P) for lam in enumerate_block(P.B)}
    if set(table.values()) != set(enumerate_block(P.C)):
        raise InternalError(f"Phi is not a bijection {P.B} -> {P.C}")
    return table


def conjugate_pair(P: PairInfo) -> PairInfo:
    """The pair (B', C'); B' is again the upper block."""
    Bc, Cc = P.B.conjugate(), P.C.conjugate()
    for Q in find_pairs(Bc, all_frames=True):
        if Q.C == Cc:
            return Q
    raise InternalError(f"no pair links {Bc} and {Cc}")


# ---------------------------------------------------------------- runner insertion


@dataclass(frozen=True)
class RunnerInsertion:
    slot: int
    kind: str
    k_rows: int

    def __post_init__(self):
        if self.kind not in (EMPTY, FULL):
            raise InvalidArgument(f"kind must be {EMPTY!r} or {FULL!r}")
        if self.k_rows < 0 or self.slot < 0:
            raise InvalidArgument("slot and k_rows must be non-negative")


def insertion_holds(lam, e: int, ins: RunnerInsertion, N: int) -> bool:
    d = display(lam, e, N)
    k = ins.k_rows
    if ins.kind == EMPTY:
        return all(r * e + c in d.beads for c in range(e) for r in range(k))
    return all(p // e < k for p in d.beads)


def insert_runner(lam, e: int, ins: RunnerInsertion, N: int) -> Partition:
    """Read the (e+1)-runner partition after adding a runner at ``ins.slot``."""
    if ins.slot > e:
        raise InvalidArgument(f"slot {ins.slot} exceeds {e}")
    if not insertion_holds(lam, e, ins, N):
        raise InvalidArgument(f"runner is not {ins.kind} relative to {list(as_partition(lam))}")
    return _insert_any(lam, e, ins, N)


def inserted_block(B: BlockId, ins: RunnerInsertion, N: int | None = None) -> BlockId:
    N = B.frame if N is None else N
    core_hat = _insert_any(B.core, B.e, ins, N)
    core, w = e_core_and_weight(core_hat, B.e + 1)
    if w != 0:
        raise InternalError("runner insertion changed the weight of a core")
    return BlockId(B.e + 1, core, B.weight)


def _insert_any(lam, e, ins, N) -> Partition:
    d = display(lam, e, N)
    beads = {(p // e) * (e + 1) + (p % e if p % e < ins.slot else p % e + 1) for p in d.beads}
    beads |= {r * (e + 1) + ins.slot for r in range(ins.k_rows)}
    return partition_of(AbacusDisplay(e + 1, frozenset(beads)))


# ---------------------------------------------------------------- Rouquier blocks


def is_rouquier_counts(counts, w: int) -> bool:
    e = len(counts)
    return all(
        counts[i] - counts[j] >= w or counts[j] - counts[i] >= w - 1
        for i in range(e)
        for j in range(i + 1, e)
    )


def rouquier_framing(B: BlockId) -> int | None:
    for N in framings(B):
        if is_rouquier_counts(runner_counts(B.core, B.e, N), B.weight):
            return N
    return None


def is_rouquier(B: BlockId) -> bool:
    return rouquier_framing(B) is not None


def _window(core, e: int, N: int) -> list[int]:
    """First vacant position on each runner, sorted; the order of these values never changes
    along a chain, only the values themselves."""
    return sorted(e * c + r for r, c in enumerate(runner_counts(core, e, N)))


def _core_from_window(win, e: int) -> Partition:
    shifted = [q - min(win) for q in win]
    beads = {p for q in shifted for p in range(q % e, q, e)}
    return partition_of(AbacusDisplay(e, frozenset(beads)))


def _target_offsets(e: int) -> list[int]:
    """Non-decreasing integers summing to 0, strictly increasing between neighbours."""
    if e % 2:
        return [j - (e - 1) // 2 for j in range(e)]
    return [j - e // 2 + (j >= e // 2) for j in range(e)]


def chain_to_rouquier(B: BlockId) -> list[PairInfo]:
    """Pairs (B_1, B_0), (B_2, B_1), ... each upper block upstream, ending Rouquier.

    Each step swaps runners r, r+1 (cyclically) where runner r's first vacancy lies above
    runner r+1's, moving the two vacancies apart. The steps are restricted to those that
    stay below a fixed Rouquier block in the weak order, which guarantees termination;
    among those the largest k wins, ties going to the smallest r.
    """
    e = B.e
    cap = 20 * e * max(B.weight, 1)
    win = _window(B.core, e, B.frame)
    target = [q + e * m for q, m in zip(win, _target_offsets(e))]
    chain: list[PairInfo] = []
    cur = B
    while not is_rouquier(cur):
        if len(chain) >= cap:
            raise InternalError(f"no Rouquier block within {cap} steps from {B}")
        at = {q % e: j for j, q in enumerate(win)}
        best = None
        for r in range(e):
            a, b = at[r], at[(r + 1) % e]
            if win[a] > win[b]:
                k = (win[a] - win[b] + 1) // e
                if target[a] > target[b] + e * k and (best is None or k > best[0]):
                    best = (k, a, b)
        if best is None:
            raise InternalError(f"{cur} has no upstream step towards a Rouquier block")
        k, a, b = best
        win[a] += 1
        win[b] -= 1
        upper = BlockId(e, _core_from_window(win, e), cur.weight)
        P = _certify(upper, cur, k)
        chain.append(P)
        cur = upper
    return chain


def _certify(upper: BlockId, lower: BlockId, k: int) -> PairInfo:
    """Locate the framing and runner index realising upper -> lower as a [w:k]-pair."""
    e = upper.e
    for N in framings(lower):
        counts = runner_counts(lower.core, e, N)
        for i in range(1, e):
            if counts[i - 1] - counts[i] == k and _swap(lower.core, e, N, i) == upper.core:
                P = (make_pair(upper, i, N) if upper.weight == 2
                     else PairInfo(upper, lower, i, k, N))
                if P.C != lower or P.B.n != lower.n + k or P.k != k:
                    break
                return P
    raise InternalError(f"chain step {lower} -> {upper} is not a [{upper.weight}:{k}]-pair")


# ---------------------------------------------------------------- restriction and induction


def restrict_weyl(lam, C: BlockId) -> dict:
    """[Delta^lam restricted, projected onto C] as partition -> multiplicity."""
    lam = as_partition(lam)
    d = display(lam, C.e, len(lam) + 1)
    out: dict = {}
    for p in d.beads:
        if p >= 1 and p - 1 not in d.beads:
            tau = partition_of(d.move(p, p - 1))
            if C.contains(tau):
                out[tau] = out.get(tau, 0) + 1
    return out


def induce_weyl(lam, B: BlockId) -> dict:
    lam = as_partition(lam)
    d = display(lam, B.e, len(lam) + 1)
    out: dict = {}
    for p in d.beads:
        if p + 1 not in d.beads:
            rho = partition_of(d.move(p, p + 1))
            if B.contains(rho):
                out[rho] = out.get(rho, 0) + 1
    return out


def _functor_matrix(src: BlockId, dst: BlockId, f) -> LabeledMatrix:
    rows, cols = enumerate_block(src), enumerate_block(dst)
    entries = []
    for lam in rows:
        image = f(lam, dst)
        entries.append([image.get(tau, 0) for tau in cols])
    return LabeledMatrix(rows, cols, entries)


def restriction_matrix(P: PairInfo) -> LabeledMatrix:
    """Weyl-module level: row lam in B lists the Weyl factors of its restriction to C."""
    if P.k != 1:
        raise Unsupported("one-step restriction links B and C only when k = 1")
    return _functor_matrix(P.B, P.C, restrict_weyl)


def induction_matrix(P: PairInfo) -> LabeledMatrix:
    if P.k != 1:
        raise Unsupported("one-step induction links C and B only when k = 1")
    return _functor_matrix(P.C, P.B, induce_weyl)
