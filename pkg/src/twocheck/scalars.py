"""Exact scalar arithmetic: rationals and quadratic extensions Q(z), z^2 = u*z + v.

Two extensions are supported, enough for the character values of the shipped
fixtures: a primitive cube root of unity (z^2 = -z - 1) and the Gaussian unit
(z^2 = -1). No floating point is used anywhere in the audits.
"""

from __future__ import annotations

from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class QuadExt:
    """Element a + b*z of Q(z) with z^2 = u*z + v (u, v rational, irreducible)."""

    __slots__ = ("a", "b", "u", "v")

    def __init__(self, a, b, u, v):
        self.a = _frac(a)
        self.b = _frac(b)
        self.u = _frac(u)
        self.v = _frac(v)

    def _lift(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if (other.u, other.v) != (self.u, self.v):
                raise TypeError("mixed quadratic extensions")
            return other
        return QuadExt(_frac(other), 0, self.u, self.v)

    def __add__(self, other):
        o = self._lift(other)
        return QuadExt(self.a + o.a, self.b + o.b, self.u, self.v)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.u, self.v)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        # (a + bz)(c + dz) = ac + bd*v + (ad + bc + bd*u) z
        a, b, c, d = self.a, self.b, o.a, o.b
        return QuadExt(a * c + b * d * self.v, a * d + b * c + b * d * self.u, self.u, self.v)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        a, b, u, v = self.a, self.b, self.u, self.v
        den = a * a + a * b * u - b * b * v
        if den == 0:
            raise ZeroDivisionError("zero element of quadratic extension")
        return QuadExt((a + b * u) / den, -b / den, u, v)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.u, self.v))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*w"


class Field:
    """A tag for the scalar ring in use; produces constants and parses tokens."""

    def __init__(self, name: str, ext: tuple | None = None):
        self.name = name
        self.ext = ext  # (u, v) or None for plain rationals

    @property
    def zero(self):
        return self._make(0, 0)

    @property
    def one(self):
        return self._make(1, 0)

    def _make(self, a, b):
        if self.ext is None:
            if b != 0:
                raise ValueError("extension coefficient in rational field")
            return _frac(a)
        return QuadExt(a, b, *self.ext)

    def generator(self):
        if self.ext is None:
            raise ValueError("rational field has no extension generator")
        return self._make(0, 1)

    def of(self, x):
        if isinstance(x, QuadExt):
            if self.ext is None or (x.u, x.v) != tuple(map(_frac, self.ext)):
                raise TypeError("scalar from a different field")
            return x
        return self._make(_frac(x), 0)

    def parse(self, token: str):
        """Parse "p/q" or "p/q+r/s*w" (also "-p/q-r/s*w")."""
        token = token.strip().replace(" ", "")
        if "*w" in token or token.endswith("w"):
            body = token[:-2] if token.endswith("*w") else token
            # split additive rational part from the w-coefficient
            if body.endswith("*w"):
                body = body[:-2]
            # find the split point: last +/- not at position 0 and not inside a fraction
            for i in range(len(token) - 1, 0, -1):
                if token[i] in "+-" and token[i - 1] not in "+-/*":
                    a_part, b_part = token[:i], token[i:]
                    break
            else:
                a_part, b_part = "0", token
            b_part = b_part.replace("*w", "").replace("w", "")
            if b_part in ("", "+"):
                b_part = "1"
            elif b_part == "-":
                b_part = "-1"
            return self._make(Fraction(a_part), Fraction(b_part))
        return self._make(Fraction(token), 0)

    def render(self, x) -> str:
        if isinstance(x, QuadExt):
            if x.b == 0:
                return str(x.a)
            return f"{x.a}+{x.b}*w" if x.b > 0 else f"{x.a}{x.b}*w"
        return str(x)

    def roots_of_unity(self, n: int):
        """All solutions of x^n = 1 in this field, in a fixed order."""
        candidates = [self.one, -self.one]
        if self.ext is not None:
            z = self.generator()
            candidates += [z, z * z, -z, -(z * z), z + self.one, -(z + self.one)]
        seen, out = set(), []
        for c in candidates:
            if c in seen:
                continue
            seen.add(c)
            acc = self.one
            for _ in range(n):
                acc = acc * c
            if acc == self.one:
                out.append(c)
        return out

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"Field({self.name})"


QQ = Field("rational")
QW = Field("cyclotomic3", ext=(-1, -1))  # w^2 = -w - 1, primitive cube root of unity
QI = Field("gaussian", ext=(0, -1))  # w^2 = -1

FIELDS = {f.name: f for f in (QQ, QW, QI)}
