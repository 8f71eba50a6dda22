"""Weight-2 blocks: enumeration, [a,b] labels, partial values, colours and
Richards classes, and the Mullineux map computed two ways."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .abacus import (
    AbacusDisplay,
    Partition,
    as_partition,
    conjugate,
    display,
    dominates,
    down_moves,
    e_core_and_weight,
    is_e_regular,
    partition_of,
)
from .errors import InternalError, InvalidArgument, NotFound, Unsupported

MAX_ENUM_WEIGHT = 4

STACK = "same-runner-stack"
DOUBLE_STEP = "double-step"
TWO_RUNNERS = "two-runners"


@dataclass(frozen=True)
class BlockId:
    e: int
    core: Partition
    weight: int = 2

    def __post_init__(self):
        object.__setattr__(self, "core", as_partition(self.core))
        if self.e < 2:
            raise InvalidArgument(f"e must be at least 2, got {self.e}")
        if self.weight < 0:
            raise InvalidArgument(f"weight must be non-negative, got {self.weight}")
        if e_core_and_weight(self.core, self.e)[1] != 0:
            raise InvalidArgument(f"{list(self.core)} is not a {self.e}-core")

    @property
    def n(self) -> int:
        return self.core.size + self.weight * self.e

    @property
    def frame(self) -> int:
        """Default bead count: every partition of the block fits with room to spare."""
        return len(self.core) + self.weight * self.e

    def conjugate(self) -> BlockId:
        return BlockId(self.e, conjugate(self.core), self.weight)

    def contains(self, lam) -> bool:
        core, w = e_core_and_weight(lam, self.e)
        return core == self.core and w == self.weight

    def to_json(self) -> dict:
        return {"e": self.e, "core": list(self.core), "weight": self.weight}

    def __str__(self):
        return f"(e={self.e}, core=[{self.core}], w={self.weight})"


@dataclass(frozen=True)
class Weight2Label:
    a: int
    b: int
    case_tag: str
    partial: int
    eps: int
    colour: str | None = None

    @property
    def label(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def class_key(self):
        return self.partial if self.partial else (0, self.colour)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "partial": self.partial, "eps": self.eps,
                "colour": self.colour}


@dataclass(frozen=True)
class RichardsClasses:
    classes: dict = field(hash=False)

    def class_of(self, lam) -> list[Partition]:
        for members in self.classes.values():
            if lam in members:
                return members
        raise NotFound(f"{lam} is in no class")

    def successor(self, lam) -> Partition | None:
        members = self.class_of(lam)
        i = members.index(lam)
        return members[i + 1] if i + 1 < len(members) else None

    def to_json(self) -> dict:
        return {class_key_name(k): [list(p) for p in v] for k, v in self.classes.items()}


def class_key_name(key) -> str:
    if isinstance(key, tuple):
        return "d0b" if key[1] == "black" else "d0w"
    return f"d{key}"


def _sort_key(key):
    # d1, d2, ..., then d0 black, d0 white
    return (1, key[1] != "black") if isinstance(key, tuple) else (0, key)


@lru_cache(maxsize=None)
def enumerate_block(B: BlockId) -> tuple[Partition, ...]:
    """Partitions with B's core and weight, in descending lexicographic order."""
    if B.weight > MAX_ENUM_WEIGHT:
        raise Unsupported(f"enumeration is limited to weight <= {MAX_ENUM_WEIGHT}")
    level = {display(B.core, B.e, B.frame)}
    for _ in range(B.weight):
        level = {d2 for d in level for _, d2 in down_moves(d)}
    return tuple(sorted((partition_of(d) for d in level), reverse=True))


def _require_weight2(B: BlockId):
    if B.weight != 2:
        raise Unsupported(f"weight-2 theory requested for a weight {B.weight} block")


def classify(lam, B: BlockId, N: int | None = None) -> Weight2Label:
    """The [a,b] label, partial value, epsilon and colour of a weight-2 partition."""
    lam = as_partition(lam)
    _require_weight2(B)
    if not B.contains(lam):
        raise InvalidArgument(f"{list(lam)} is not in block {B}")
    if N is None:
        return _classify_cached(lam, B)
    return _classify(display(lam, B.e, N))


@lru_cache(maxsize=None)
def _classify_cached(lam: Partition, B: BlockId) -> Weight2Label:
    return _classify(display(lam, B.e, B.frame))


def _classify(d: AbacusDisplay) -> Weight2Label:
    e = d.e
    loose = sorted((p for p in d.beads if p >= e and p - e not in d.beads), reverse=True)
    colour = None
    if len(loose) == 2:
        x, y = loose
        if x % e == y % e:
            raise InternalError(f"two loose beads on one runner in {sorted(d.beads)}")
        a = d.vacant_between(x - e, x)
        b = d.vacant_between(y - e, y)
        partial = a - b + 1 if x - e < y < x else a - b
        tag = TWO_RUNNERS
        if partial == 0:
            legs = (d.occupied_between(x - e, x), d.occupied_between(y - e, y))
            colour = "black" if max(legs) % 2 == 0 else "white"
    elif len(loose) == 1:
        p = loose[0]
        if p - 2 * e >= 0 and p - 2 * e not in d.beads:
            x = p
            a = d.vacant_between(x - e, x)
            b = d.vacant_between(x - 2 * e, x - e) + 1  # x - e itself is vacant
            partial = a - b + 1
            tag = DOUBLE_STEP
        else:
            x = p + e
            if x not in d.beads:
                raise InternalError(f"no bead above the stack in {sorted(d.beads)}")
            a = d.vacant_between(x - e, x)
            b = d.vacant_between(x - 2 * e, x - e)
            partial = a - b
            tag = STACK
        if partial == 0:
            leg = d.occupied_between(x - 2 * e, x)
            colour = "black" if leg % 4 in (0, 3) else "white"
    else:
        raise InternalError(f"{len(loose)} loose beads; not a weight-2 display")
    eps = int(partial != a - b)
    return Weight2Label(a, b, tag, partial, eps, colour)


@lru_cache(maxsize=None)
def label_table(B: BlockId) -> dict:
    """(a, b) -> partition, for every partition of B."""
    table = {}
    for lam in enumerate_block(B):
        key = classify(lam, B).label
        if key in table:
            raise InternalError(f"label {key} carried by {table[key]} and {lam}")
        table[key] = lam
    return table


def partition_of_label(B: BlockId, a: int, b: int) -> Partition:
    try:
        return label_table(B)[(a, b)]
    except KeyError:
        raise NotFound(f"no partition [{a},{b}] in block {B}") from None


def expected_labels(e: int) -> set[tuple[int, int]]:
    labels = {(a, b) for a in range(e) for b in range(a)}
    labels |= {(a, a) for a in range(e)}
    labels |= {(a, a + 1) for a in range(e)}
    return labels


@lru_cache(maxsize=None)
def richards_classes(B: BlockId) -> RichardsClasses:
    _require_weight2(B)
    groups: dict = {}
    for lam in enumerate_block(B):  # lex order refines dominance
        groups.setdefault(classify(lam, B).class_key, []).append(lam)
    ordered = {k: groups[k] for k in sorted(groups, key=_sort_key)}
    return RichardsClasses(ordered)


def partial(lam, B: BlockId) -> int:
    return classify(lam, B).partial


def chain_successor(mu, B: BlockId) -> Partition | None:
    """m(mu)' for e-regular mu: the next smaller partition in mu's Richards class."""
    return richards_classes(B).successor(as_partition(mu))


def mullineux_by_chain(lam, B: BlockId) -> Partition:
    lam = as_partition(lam)
    if not is_e_regular(lam, B.e):
        raise InvalidArgument(f"{list(lam)} is {B.e}-singular")
    succ = chain_successor(lam, B)
    if succ is None:
        raise InternalError(f"e-regular {list(lam)} is least in its Richards class")
    return conjugate(succ)


def mullineux_label(a: int, b: int, e: int) -> tuple[int, int]:
    if b == a + 1 and 1 <= a < e:
        return (e - a, e - a + 1)
    if 1 <= b <= a < e:
        return (e - b, e - a)
    raise InvalidArgument(f"[{a},{b}] is not the label of an e-regular partition")


def mullineux_by_label(lam, B: BlockId) -> Partition:
    lam = as_partition(lam)
    if not is_e_regular(lam, B.e):
        raise InvalidArgument(f"{list(lam)} is {B.e}-singular")
    lab = classify(lam, B)
    try:
        target = mullineux_label(lab.a, lab.b, B.e)
    except InvalidArgument:
        raise InternalError(f"e-regular {list(lam)} carries label [{lab.a},{lab.b}]") from None
    return partition_of_label(B.conjugate(), *target)


def mullineux(lam, B: BlockId) -> Partition:
    """Mullineux image of an e-regular weight-2 partition; lies in the conjugate block."""
    by_chain = mullineux_by_chain(lam, B)
    by_label = mullineux_by_label(lam, B)
    if by_chain != by_label:
        raise InternalError(f"m({list(lam)}): chain gives {list(by_chain)}, labels give {list(by_label)}")
    return by_chain


def is_block_partition(lam, B: BlockId) -> bool:
    try:
        return B.contains(lam)
    except InvalidArgument:
        return False


def dominance_chain_ok(members) -> bool:
    return all(dominates(members[i], members[i + 1]) for i in range(len(members) - 1))
