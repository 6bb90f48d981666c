"""Compositions, partitions, dominance orders, rank functions and tableaux.

Tableaux are drawn bottom-up: row 1 is the bottom row, entries decrease
left to right along rows and (for RSYT) from bottom to top in columns.
"""
from itertools import accumulate

RSYT = "rsyt"
ROW_ORDERED = "row-ordered"

DEFAULT_TABLEAU_CAP = 20


class IllegalStepError(ValueError):
    pass


class Composition(tuple):
    """Fixed-length vector of nonnegative integers; the length N is part of the value."""

    def __new__(cls, entries):
        entries = tuple(int(x) for x in entries)
        if any(x < 0 for x in entries):
            raise ValueError(f"negative entry in composition {entries}")
        return super().__new__(cls, entries)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(x) for x in text.split(","))

    @property
    def N(self):
        return len(self)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        """Index of the last nonzero entry (0 for the zero composition)."""
        for i in range(len(self), 0, -1):
            if self[i - 1]:
                return i
        return 0

    def sorted_desc(self):
        return Partition(sorted(self, reverse=True))

    def swap(self, i):
        """Exchange entries i and i+1 (1-based)."""
        e = list(self)
        e[i - 1], e[i] = e[i], e[i - 1]
        return Composition(e)

    def padded(self, N):
        if N < len(self):
            raise ValueError("cannot pad to a shorter length")
        return Composition(tuple(self) + (0,) * (N - len(self)))

    def text(self):
        return ",".join(str(x) for x in self)

    def __repr__(self):
        return f"Composition({tuple(self)})"


class Partition(Composition):
    """Weakly decreasing vector of nonnegative integers."""

    def __new__(cls, entries):
        obj = super().__new__(cls, entries)
        if any(obj[i] < obj[i + 1] for i in range(len(obj) - 1)):
            raise ValueError(f"not weakly decreasing: {tuple(obj)}")
        return obj

    @property
    def parts(self):
        return tuple(x for x in self if x)

    def __repr__(self):
        return f"Partition({tuple(self)})"


def rank_function(a):
    """r(i) = #{k: a_k > a_i} + #{k <= i: a_k = a_i}, as a 1-based tuple."""
    out = []
    for i, x in enumerate(a):
        bigger = sum(1 for y in a if y > x)
        equal_before = sum(1 for y in a[: i + 1] if y == x)
        out.append(bigger + equal_before)
    return tuple(out)


def _check_same(a, b):
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")


def dominance_succ(a, b):
    """Strict prefix-sum dominance a > b; requires equal sizes and lengths."""
    _check_same(a, b)
    if sum(a) != sum(b):
        raise ValueError(f"size mismatch: |a| = {sum(a)}, |b| = {sum(b)}")
    if tuple(a) == tuple(b):
        return False
    return all(x >= y for x, y in zip(accumulate(a), accumulate(b)))


def dominance_tri(a, b):
    """The order that compares sorted rearrangements first, then prefix sums."""
    _check_same(a, b)
    if sum(a) != sum(b) or tuple(a) == tuple(b):
        return False
    sa, sb = sorted(a, reverse=True), sorted(b, reverse=True)
    if sa != sb:
        return dominance_succ(sa, sb)
    return dominance_succ(a, b)


def compositions(size, N):
    """All compositions of size into N parts, lexicographically decreasing."""
    if N == 0:
        if size == 0:
            yield Composition(())
        return
    if N == 1:
        yield Composition((size,))
        return
    for first in range(size, -1, -1):
        for rest in compositions(size - first, N - 1):
            yield Composition((first,) + tuple(rest))


class Tableau:
    """A filling of a partition shape by 1..n with rows strictly decreasing.

    rows are listed bottom to top; kind is RSYT when columns also decrease
    upward, otherwise ROW_ORDERED.
    """

    __slots__ = ("shape", "rows", "kind", "_row", "_col", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        shape = tuple(len(r) for r in rows)
        if any(s == 0 for s in shape):
            raise ValueError("empty row in tableau")
        self.shape = Partition(shape)
        n = sum(shape)
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, n + 1)):
            raise ValueError(f"entries must be exactly 1..{n}")
        for r in rows:
            if any(r[c] <= r[c + 1] for c in range(len(r) - 1)):
                raise ValueError(f"row {r} is not strictly decreasing")
        self.rows = rows
        row_of = [0] * (n + 1)
        col_of = [0] * (n + 1)
        for ri, r in enumerate(rows, start=1):
            for ci, x in enumerate(r, start=1):
                row_of[x] = ri
                col_of[x] = ci
        self._row = tuple(row_of)
        self._col = tuple(col_of)
        columns_ok = all(
            rows[ri][c] > rows[ri + 1][c]
            for ri in range(len(rows) - 1)
            for c in range(len(rows[ri + 1]))
        )
        self.kind = RSYT if columns_ok else ROW_ORDERED
        self._hash = hash(rows)

    @property
    def size(self):
        return len(self._row) - 1

    @property
    def is_rsyt(self):
        return self.kind == RSYT

    def row(self, i):
        return self._row[i]

    def col(self, i):
        return self._col[i]

    def content(self, i):
        return self._col[i] - self._row[i]

    def entry(self, row, col):
        return self.rows[row - 1][col - 1]

    def has_cell(self, row, col):
        return 1 <= row <= len(self.rows) and 1 <= col <= len(self.rows[row - 1])

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"

    def row_word(self):
        return tuple(x for r in self.rows for x in r)

    def swapped(self, i):
        """Exchange entries i and i+1 without any legality check beyond row order."""
        rows = [list(r) for r in self.rows]
        (r1, c1), (r2, c2) = (self._row[i], self._col[i]), (self._row[i + 1], self._col[i + 1])
        rows[r1 - 1][c1 - 1] = i + 1
        rows[r2 - 1][c2 - 1] = i
        return Tableau(rows)

    def to_json(self):
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data):
        t = cls(data["rows"])
        if "shape" in data and list(t.shape) != list(data["shape"]):
            raise ValueError("shape does not match rows")
        return t

    def text(self):
        """Top row first, as drawn."""
        width = len(str(self.size))
        return "\n".join(" ".join(str(x).rjust(width) for x in r)
                         for r in reversed(self.rows))


def content_vector(S):
    return tuple(S.content(i) for i in range(1, S.size + 1))


def inversions(S):
    n = S.size
    return sum(1 for i in range(1, n + 1) for j in range(i + 1, n + 1)
               if S.row(i) < S.row(j))


def extremal_tableaux(shape):
    """(S0, S1): N..1 entered column by column, and row by row."""
    shape = Partition(shape).parts
    n = sum(shape)
    rows0 = [[0] * s for s in shape]
    v = n
    for c in range(shape[0]):
        for r in range(len(shape)):
            if c < shape[r]:
                rows0[r][c] = v
                v -= 1
    rows1 = []
    v = n
    for s in shape:
        rows1.append(list(range(v, v - s, -1)))
        v -= s
    return Tableau(rows0), Tableau(rows1)


def step(S, i):
    """S^(i): exchange i and i+1 when i+1 sits in a higher row and an earlier column."""
    if not 1 <= i < S.size:
        raise IllegalStepError(f"illegal step at i={i}: index out of range")
    if not (S.row(i) < S.row(i + 1) and S.col(i) > S.col(i + 1)):
        raise IllegalStepError(
            f"illegal step at i={i}: need row[i] < row[i+1] and col[i] > col[i+1]")
    out = S.swapped(i)
    if S.is_rsyt and not out.is_rsyt:
        raise IllegalStepError(f"illegal step at i={i}: result is not an RSYT")
    return out


def enumerate_rsyt(shape, cap=DEFAULT_TABLEAU_CAP):
    """All RSYT of the shape, inv descending, ties by row word ascending."""
    shape = Partition(shape).parts
    n = sum(shape)
    if n > cap:
        raise ValueError(f"shape has {n} cells, cap is {cap}")
    if n == 0:
        return []
    found = []
    rows = [[] for _ in shape]

    # place n, n-1, ..., 1; the filled cells always form a partition shape
    def place(v):
        if v == 0:
            found.append(Tableau([list(r) for r in rows]))
            return
        for r, s in enumerate(shape):
            c = len(rows[r])
            if c < s and (r == 0 or len(rows[r - 1]) > c):
                rows[r].append(v)
                place(v - 1)
                rows[r].pop()

    place(n)
    found.sort(key=lambda S: (-inversions(S), S.row_word()))
    return found

