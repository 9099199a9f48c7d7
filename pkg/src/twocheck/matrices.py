"""Dense exact matrices over a scalar Field, with RREF, nullspace and solves.

Everything is immutable (tuples of tuples). Row reduction is plain
fraction-free-enough Gaussian elimination with exact division; fine at the
dimensions the audits use.
"""

from __future__ import annotations

from .scalars import Field, QQ


class Mat:
    __slots__ = ("field", "entries", "rows", "cols")

    def __init__(self, field: Field, entries, cols=None):
        self.field = field
        rows = tuple(tuple(field.of(x) for x in row) for row in entries)
        self.entries = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != self.cols for r in rows):
            raise ValueError("ragged matrix")

    @staticmethod
    def identity(field: Field, n: int) -> "Mat":
        one, zero = field.one, field.zero
        return Mat(field, [[one if i == j else zero for j in range(n)] for i in range(n)], cols=n)

    @staticmethod
    def zeros(field: Field, r: int, c: int) -> "Mat":
        zero = field.zero
        return Mat(field, [[zero] * c for _ in range(r)], cols=c)

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field.name, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.render(x) for x in row) for row in self.entries)
        return f"Mat[{body}]"

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = self.field.zero
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return Mat(self.field, out, cols=other.cols)

    def __add__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return Mat(
            self.field,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __sub__(self, other: "Mat") -> "Mat":
        return self + other.scale(-self.field.one)

    def scale(self, c) -> "Mat":
        c = self.field.of(c)
        return Mat(self.field, [[c * x for x in row] for row in self.entries], cols=self.cols)

    def transpose(self) -> "Mat":
        if self.rows == 0:
            return Mat(self.field, [[] for _ in range(self.cols)], cols=0)
        return Mat(self.field, list(zip(*self.entries)), cols=self.rows)

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Mat(
            self.field,
            [r1 + r2 for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols + other.cols,
        )

    def col(self, j: int) -> "Mat":
        return Mat(self.field, [[row[j]] for row in self.entries], cols=1)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Mat.identity(self.field, self.rows)

    def rref(self):
        """Reduced row echelon form; returns (rref_matrix, pivot_columns)."""
        m = [list(row) for row in self.entries]
        nr, nc = self.rows, self.cols
        zero = self.field.zero
        pivots = []
        r = 0
        for c in range(nc):
            pr = None
            for i in range(r, nr):
                if m[i][c] != zero:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            pv = m[r][c]
            m[r] = [x / pv for x in m[r]]
            for i in range(nr):
                if i != r and m[i][c] != zero:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        return Mat(self.field, m, cols=nc), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list["Mat"]:
        """Basis of the right kernel as column vectors, in pivot order."""
        R, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        zero, one = self.field.zero, self.field.one
        basis = []
        for fc in free:
            vec = [zero] * self.cols
            vec[fc] = one
            for i, pc in enumerate(pivots):
                vec[pc] = -R.entries[i][fc]
            basis.append(Mat(self.field, [[x] for x in vec]))
        return basis

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = self.hstack(Mat.identity(self.field, n))
        R, pivots = aug.rref()
        if pivots[:n] != tuple(range(n)):
            raise ValueError("singular matrix")
        return Mat(self.field, [row[n:] for row in R.entries])

    def solve(self, rhs: "Mat") -> "Mat":
        """Solve self @ X = rhs exactly; requires a consistent system with
        full column rank (unique solution)."""
        aug = self.hstack(rhs)
        R, pivots = aug.rref()
        np = len([p for p in pivots if p < self.cols])
        if np != self.cols:
            raise ValueError("system does not have a unique solution")
        if any(p >= self.cols for p in pivots):
            raise ValueError("inconsistent system")
        zero = self.field.zero
        out = [[zero] * rhs.cols for _ in range(self.cols)]
        for i, p in enumerate(pivots):
            for j in range(rhs.cols):
                out[p][j] = R.entries[i][self.cols + j]
        return Mat(self.field, out, cols=rhs.cols)


def block_diag(field: Field, blocks) -> Mat:
    blocks = list(blocks)
    r = sum(b.rows for b in blocks)
    c = sum(b.cols for b in blocks)
    out = [[field.zero] * c for _ in range(r)]
    ro = co = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[ro + i][co + j] = b.entries[i][j]
        ro += b.rows
        co += b.cols
    return Mat(field, out, cols=c)


def from_columns(field: Field, cols, rows=None) -> Mat:
    cols = list(cols)
    if not cols:
        return Mat(field, [[] for _ in range(rows or 0)], cols=0)
    n = cols[0].rows
    return Mat(field, [[c.entries[i][0] for c in cols] for i in range(n)], cols=len(cols))


def parse_matrix(field: Field, rows) -> Mat:
    return Mat(field, [[field.parse(str(x)) for x in row] for row in rows])


def render_matrix(m: Mat):
    return [[m.field.render(x) for x in row] for row in m.entries]


def rational(p, q=1):
    from fractions import Fraction

    return Fraction(p, q)


RATIONALS = QQ
