"""Integer polynomials in v, stored as ascending coefficient tuples."""
from __future__ import annotations

from .errors import InvalidArgument


class VPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> VPoly:
        return cls([0] * k + [coeff])

    @staticmethod
    def coerce(x) -> VPoly:
        return x if isinstance(x, VPoly) else VPoly(x)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (VPoly, int)):
            return self.coeffs == VPoly.coerce(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = VPoly.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return VPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return VPoly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-VPoly.coerce(other))

    def __rsub__(self, other):
        return VPoly.coerce(other) - self

    def __mul__(self, other):
        other = VPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return VPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return VPoly(out)

    __rmul__ = __mul__

    def __call__(self, v):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def at_one(self) -> int:
        return sum(self.coeffs)

    def derivative_at_one(self) -> int:
        return sum(i * c for i, c in enumerate(self.coeffs))

    def negate_variable(self) -> VPoly:
        """f(-v)."""
        return VPoly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def bar_shift(self, w: int) -> VPoly:
        """v^w f(v^-1); needs deg f <= w."""
        if self.degree > w:
            raise InvalidArgument(f"degree {self.degree} exceeds shift {w}")
        return VPoly(reversed(self.coeffs + (0,) * (w + 1 - len(self.coeffs))))

    def is_monomial(self, k: int) -> bool:
        return self.coeffs == (0,) * k + (1,)

    def __repr__(self):
        return f"VPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("v" if i == 1 else f"v^{i}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list[int]:
        return list(self.coeffs)


V = VPoly.monomial(1)
