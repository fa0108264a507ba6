"""Rank/unrank bijection over size classes, and uniform sampling.

For a size ``n`` and free-index bound ``m`` the terms of that class are
totally ordered: abstractions come first (ordered by their bodies),
then applications (by size of the function part, then function rank,
then argument rank), and last, when n - 1 <= m admits it, the lone
variable ``Index(n - 1)``.  ``unrank(m, n, k)`` maps the 1-based rank k
to the k-th term, ``rank`` inverts it exactly, and a ``Sampler`` draws
uniform terms by drawing uniform ranks.

Ranks are plain Python ints, so classes with astronomically many terms
(sizes in the hundreds) work unchanged.  Both directions run a work
stack rather than recursing.
"""

from __future__ import annotations

import math
import random

from . import counting
from .terms import Abs, App, FreeIndexExceeded, Index, Term, max_free_index

__all__ = [
    "NoTerms",
    "OutOfRange",
    "AttemptsExhausted",
    "unrank",
    "rank",
    "Sampler",
    "sample",
    "sample_typable",
]


class NoTerms(ValueError):
    """The requested size class is empty."""


class OutOfRange(ValueError):
    """A rank outside 1..count(m, n) was requested."""


class AttemptsExhausted(RuntimeError):
    """The typable-term sieve hit its attempt limit."""


def _bound_label(m: int | float) -> str:
    return "unbounded" if m == math.inf else f"free indices <= {m}"


# Work-stack tags for unrank.
_EXPAND, _MK_ABS, _MK_APP = 0, 1, 2


def unrank(m: int | float, n: int, k: int, *, table: counting.CountTable | None = None) -> Term:
    """The k-th term (1-based) of the size-n class at free-index bound m.

    Raises ``NoTerms`` when the class is empty and ``OutOfRange`` when
    it is not but k falls outside it.
    """
    tbl = table or counting.shared_table()
    total = tbl.count(m, n)
    if total == 0:
        raise NoTerms(f"no terms of size {n} ({_bound_label(m)})")
    if not 1 <= k <= total:
        raise OutOfRange(f"rank {k} outside 1..{total} for size {n} ({_bound_label(m)})")
    if m > n - 1:
        m = n - 1  # same class; keeps the bound a small int
    cnt = tbl.count
    out: list[Term] = []
    work: list[tuple] = [(_EXPAND, m, n, k)]
    while work:
        item = work.pop()
        tag = item[0]
        if tag == _MK_ABS:
            out[-1] = Abs(out[-1])
            continue
        if tag == _MK_APP:
            arg = out.pop()
            out[-1] = App(out[-1], arg)
            continue
        _, m, n, k = item
        while True:
            # Abstractions occupy ranks 1..count(m+1, n-2), applications
            # the block after them, and the variable (present exactly
            # when m >= n - 1) the final rank.
            if m >= n - 1 and k == cnt(m, n):
                out.append(Index(n - 1))
                break
            body_total = cnt(m + 1, n - 2)
            if k <= body_total:
                work.append((_MK_ABS,))
                m, n = m + 1, n - 2
                continue
            h = k - body_total
            base = n - 2
            fun_size = 0
            while True:
                arg_total = cnt(m, base - fun_size)
                block = cnt(m, fun_size) * arg_total
                if h <= block:
                    fun_rank, arg_rank = divmod(h - 1, arg_total)
                    work.append((_MK_APP,))
                    work.append((_EXPAND, m, base - fun_size, arg_rank + 1))
                    n, k = fun_size, fun_rank + 1
                    break
                h -= block
                fun_size += 1
    return out[0]


# Work-stack tags for rank.
_DOWN, _AFTER_ABS, _AFTER_APP = 0, 1, 2


def rank(m: int | float, term: Term, *, table: counting.CountTable | None = None) -> int:
    """Position of ``term`` in its size class at bound m; inverse of unrank.

    Raises ``FreeIndexExceeded`` if the term has a free index above m.
    """
    tbl = table or counting.shared_table()
    free = max_free_index(term)
    if free > m:
        raise FreeIndexExceeded(f"term has free index {free}, above the bound {m}")
    cnt = tbl.count
    work: list[tuple] = [(_DOWN, term, m)]
    # Finished subterms as (size, rank) pairs, innermost last.
    done: list[tuple[int, int]] = []
    while work:
        tag, node, bound = work.pop()
        if tag == _DOWN:
            tp = type(node)
            if tp is Index:
                n = node.i + 1
                # The variable is the last rank of its own class.
                done.append((n, cnt(bound, n)))
            elif tp is Abs:
                work.append((_AFTER_ABS, None, bound))
                work.append((_DOWN, node.body, bound + 1))
            else:
                work.append((_AFTER_APP, None, bound))
                work.append((_DOWN, node.arg, bound))
                work.append((_DOWN, node.fun, bound))
        elif tag == _AFTER_ABS:
            n, k = done.pop()
            done.append((n + 2, k))
        else:
            arg_size, arg_rank = done.pop()
            fun_size, fun_rank = done.pop()
            base = fun_size + arg_size
            h = 0
            for j in range(fun_size):
                h += cnt(bound, j) * cnt(bound, base - j)
            h += (fun_rank - 1) * cnt(bound, arg_size) + arg_rank
            done.append((base + 2, cnt(bound + 1, base) + h))
    return done[0][1]


class Sampler:
    """Deterministic uniform sampler over size classes.

    Uses the Mersenne Twister (MT19937 via ``random.Random``), whose
    output for a given seed is stable across platforms and Python
    versions.  A rank is drawn by rejection on the power-of-two
    envelope: take bit_length(total - 1) random bits and retry until
    the value falls below the class size, so every rank is exactly
    equally likely.  For parallel work, give worker i an independent
    stream with ``Sampler(seed ^ i)``.
    """

    generator = "mt19937"

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)

    def rank_below(self, total: int) -> int:
        """Uniform integer in 1..total."""
        if total < 1:
            raise ValueError(f"need a positive total, got {total}")
        bits = (total - 1).bit_length()
        getrandbits = self._rng.getrandbits
        while True:
            value = getrandbits(bits)
            if value < total:
                return value + 1


def sample(
    m: int | float,
    n: int,
    state: Sampler,
    *,
    table: counting.CountTable | None = None,
) -> Term:
    """One uniform term from the (m, n) class."""
    tbl = table or counting.shared_table()
    total = tbl.count(m, n)
    if total == 0:
        raise NoTerms(f"no terms of size {n} ({_bound_label(m)})")
    return unrank(m, n, state.rank_below(total), table=tbl)


def sample_typable(
    m: int | float,
    n: int,
    state: Sampler,
    max_attempts: int = 10000,
    *,
    table: counting.CountTable | None = None,
) -> Term:
    """Uniform term from the typable fraction of the (m, n) class.

    Rejection-sieves plain uniform draws through the type checker, so
    the result is uniform over exactly the typable terms.  Raises
    ``AttemptsExhausted`` after ``max_attempts`` failed draws (typable
    terms get scarce as n grows, so the limit matters).
    """
    from .typecheck import is_typable

    tbl = table or counting.shared_table()
    total = tbl.count(m, n)
    if total == 0:
        raise NoTerms(f"no terms of size {n} ({_bound_label(m)})")
    for _ in range(max_attempts):
        term = unrank(m, n, state.rank_below(total), table=tbl)
        if is_typable(term, max_free_index(term)):
            return term
    raise AttemptsExhausted(
        f"no typable term of size {n} ({_bound_label(m)}) in {max_attempts} draws"
    )
