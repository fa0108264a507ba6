"""Exact counts of lambda terms by size and free-index bound.

``count(m, n)`` is the number of terms of size ``n`` all of whose free
indices lie in 1..m; ``count(math.inf, n)`` drops the bound and counts
every term of size ``n``.  Values are exact integers from the
recurrence

    count(m, 0)     = count(m, 1) = 0
    count(m, n + 2) = [m >= n + 1]
                    + count(m + 1, n)
                    + sum_{k=0}^{n} count(m, k) * count(m, n - k)

where the bracket contributes 1 for the variable of size n + 2 (always
present in the unbounded case), the middle term counts abstractions and
the convolution counts applications.

An index worth i + 1 bits cannot exceed n - 1 inside a term of size n,
so ``count(m, n) == count(math.inf, n)`` for every m >= n - 1.  The memo
table exploits that: it keeps one dense row of unbounded counts plus,
for each finite m, only the entries with n >= m + 2; smaller columns of
a finite row alias the unbounded row.  Storage is therefore quadratic
in the largest size filled, and the convolution halves its work via the
symmetry of k <-> n - k.
"""

from __future__ import annotations

import math


class CountTable:
    """Memo table for the counting recurrence.

    Grows on demand; ``ensure(n)`` fills every column up to n.  Filling
    is column-major (sizes ascending, bounds descending within a
    column), so each entry's dependencies are ready when needed.  Reads
    of already-filled entries never mutate, so a table may be shared
    freely once built.
    """

    def __init__(self, max_n: int = 0):
        self._inf: list[int] = [0]
        # _rows[m][n] for finite m; _rows[m][: m + 2] aliases _inf.
        self._rows: list[list[int]] = []
        # Smallest n with _rows[m][n] > 0, or None while the row is all
        # zero; lets the convolution skip the empty prefix.
        self._first_nonzero: list[int | None] = []
        if max_n > 0:
            self.ensure(max_n)

    @property
    def max_n(self) -> int:
        return len(self._inf) - 1

    def ensure(self, n: int) -> None:
        """Fill the table through size ``n`` (no-op if already there)."""
        old = self.max_n
        if n <= old:
            return
        inf = self._inf
        inf.extend([0] * (n - old))
        for col in range(max(2, old + 1), n + 1):
            base = col - 2
            half = 0
            k, j = 2, base - 2
            while k < j:
                half += inf[k] * inf[j]
                k += 1
                j -= 1
            conv = 2 * half
            if k == j:
                conv += inf[k] * inf[k]
            inf[col] = 1 + inf[base] + conv
        rows = self._rows
        first_nonzero = self._first_nonzero
        for col in range(max(2, old + 1), n + 1):
            base = col - 2
            for m in range(col - 2, -1, -1):
                if m == len(rows):
                    # New row: every column below m + 2 saturates, so
                    # alias the unbounded prefix.
                    rows.append(inf[: m + 2])
                    first_nonzero.append(2 if m >= 1 else None)
                row = rows[m]
                if m + 1 >= base - 1:
                    abs_part = inf[base]
                else:
                    abs_part = rows[m + 1][base]
                lo = first_nonzero[m]
                conv = 0
                if lo is not None:
                    half = 0
                    k, j = lo, base - lo
                    while k < j:
                        half += row[k] * row[j]
                        k += 1
                        j -= 1
                    conv = 2 * half
                    if k == j:
                        conv += row[k] * row[k]
                # The variable of size col needs m >= col - 1, which
                # never holds in the stored range m <= col - 2.
                val = abs_part + conv
                row.append(val)
                if val and lo is None:
                    first_nonzero[m] = col

    def count(self, m: int | float, n: int) -> int:
        """Exact count for free-index bound ``m`` (math.inf allowed)."""
        if n < 0:
            raise ValueError(f"size must be >= 0, got {n}")
        if m != math.inf and not (isinstance(m, int) and m >= 0):
            raise ValueError(f"free-index bound must be a nonnegative int or math.inf, got {m!r}")
        self.ensure(n)
        if m >= n - 1:
            return self._inf[n]
        return self._rows[m][n]

    def count_row(self, m: int | float, max_n: int) -> list[int]:
        """Counts for sizes 0..max_n at bound ``m``."""
        self.ensure(max_n)
        return [self.count(m, n) for n in range(max_n + 1)]


_shared = CountTable()


def shared_table() -> CountTable:
    """The module-wide table reused across calls that pass no table."""
    return _shared


def count(m: int | float, n: int, *, table: CountTable | None = None) -> int:
    return (table or _shared).count(m, n)


def count_row(m: int | float, max_n: int, *, table: CountTable | None = None) -> list[int]:
    return (table or _shared).count_row(m, max_n)


def verify_functional_equation(max_n: int, *, table: CountTable | None = None) -> bool:
    """Check that the unbounded counts solve, as truncated power series,

        G(z) = z^2 / (1 - z) + z^2 G(z) + z^2 G(z)^2.

    The three right-hand terms are the variables (one per size >= 2),
    the abstractions and the applications.  The series arithmetic here
    is written out directly and shares nothing with the table's fill
    loops, so it is an independent consistency check of every
    coefficient up to ``max_n``.  Returns True iff they all agree.
    """
    if max_n < 2:
        raise ValueError(f"need max_n >= 2, got {max_n}")
    tbl = table or _shared
    tbl.ensure(max_n)
    g = [tbl.count(math.inf, n) for n in range(max_n + 1)]
    for n in range(max_n + 1):
        if n >= 2:
            square = sum(g[k] * g[n - 2 - k] for k in range(n - 1))
            rhs = 1 + g[n - 2] + square
        else:
            rhs = 0
        if g[n] != rhs:
            return False
    return True
