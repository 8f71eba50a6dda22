"""Dense matrices indexed by explicit partition lists, with integer or VPoly entries."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .abacus import as_partition
from .errors import InvalidArgument
from .vpoly import VPoly


def _entry_json(x):
    return x.to_json() if isinstance(x, VPoly) else x


@dataclass(frozen=True)
class LabeledMatrix:
    rows: tuple
    cols: tuple
    entries: tuple
    _row_pos: dict = field(init=False, repr=False, compare=False, hash=False)
    _col_pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, rows, cols, entries):
        rows = tuple(as_partition(r) for r in rows)
        cols = tuple(as_partition(c) for c in cols)
        entries = tuple(tuple(r) for r in entries)
        if len(entries) != len(rows) or any(len(r) != len(cols) for r in entries):
            raise InvalidArgument("entry array shape does not match the index lists")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_row_pos", {r: i for i, r in enumerate(rows)})
        object.__setattr__(self, "_col_pos", {c: j for j, c in enumerate(cols)})

    @property
    def kind(self) -> str:
        return "vpoly" if any(isinstance(x, VPoly) for r in self.entries for x in r) else "int"

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def row_index(self, lam) -> int:
        try:
            return self._row_pos[as_partition(lam)]
        except KeyError:
            raise InvalidArgument(f"{list(lam)} is not a row label") from None

    def col_index(self, mu) -> int:
        try:
            return self._col_pos[as_partition(mu)]
        except KeyError:
            raise InvalidArgument(f"{list(mu)} is not a column label") from None

    def __getitem__(self, key):
        lam, mu = key
        return self.entries[self.row_index(lam)][self.col_index(mu)]

    def row(self, lam) -> dict:
        i = self.row_index(lam)
        return dict(zip(self.cols, self.entries[i]))

    def column(self, mu) -> dict:
        j = self.col_index(mu)
        return {r: self.entries[i][j] for i, r in enumerate(self.rows)}

    def as_lists(self) -> list[list]:
        return [list(r) for r in self.entries]

    def transpose(self) -> LabeledMatrix:
        return LabeledMatrix(self.cols, self.rows, zip(*self.entries) if self.entries else [])

    def map(self, f) -> LabeledMatrix:
        return LabeledMatrix(self.rows, self.cols, [[f(x) for x in r] for r in self.entries])

    def __matmul__(self, other: LabeledMatrix) -> LabeledMatrix:
        if self.cols != other.rows:
            raise InvalidArgument("inner index lists differ")
        cols_t = list(zip(*other.entries)) if other.entries else [()] * len(other.cols)
        out = []
        for r in self.entries:
            row = []
            for c in cols_t:
                acc = 0
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return LabeledMatrix(self.rows, other.cols, out)

    def reindex(self, rows=None, cols=None) -> LabeledMatrix:
        """Same entries, rows/cols permuted to the given label order."""
        rows = self.rows if rows is None else tuple(as_partition(r) for r in rows)
        cols = self.cols if cols is None else tuple(as_partition(c) for c in cols)
        return LabeledMatrix(rows, cols, [[self[r, c] for c in cols] for r in rows])

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            x == (1 if i == j else 0) for i, r in enumerate(self.entries) for j, x in enumerate(r)
        )

    def to_json(self) -> dict:
        return {
            "rows": [list(r) for r in self.rows],
            "cols": [list(c) for c in self.cols],
            "kind": self.kind,
            "entries": [[_entry_json(x) for x in r] for r in self.entries],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        w.writerow([""] + [str(c) for c in self.cols])
        for lab, r in zip(self.rows, self.entries):
            w.writerow([str(lab)] + [str(x) if isinstance(x, VPoly) else x for x in r])
        return buf.getvalue()

    def to_text(self) -> str:
        cells = [[""] + [f"({c})" for c in self.cols]]
        cells += [[f"({lab})"] + [str(x) for x in r] for lab, r in zip(self.rows, self.entries)]
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
        return "\n".join(
            "  ".join(s.rjust(w) for s, w in zip(row, widths)).rstrip() for row in cells
        )


def is_lower_unitriangular(M: LabeledMatrix) -> bool:
    if M.rows != M.cols:
        return False
    for i, r in enumerate(M.entries):
        for j, x in enumerate(r):
            if (j == i and x != 1) or (j > i and x != 0):
                return False
    return True


def invert_unitriangular(M: LabeledMatrix) -> LabeledMatrix:
    """Exact inverse of a lower unitriangular matrix by forward substitution."""
    if not is_lower_unitriangular(M):
        raise InvalidArgument("matrix is not lower unitriangular in its index order")
    n = len(M.rows)
    a = M.entries
    inv = [[0] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = 1
        for j in range(i - 1, -1, -1):
            acc = 0
            for k in range(j, i):
                if a[i][k] and inv[k][j]:
                    acc = acc + a[i][k] * inv[k][j]
            inv[i][j] = -acc if acc else 0
    return LabeledMatrix(M.rows, M.cols, inv)


def identity(labels) -> LabeledMatrix:
    labels = tuple(labels)
    n = len(labels)
    return LabeledMatrix(labels, labels, [[int(i == j) for j in range(n)] for i in range(n)])

