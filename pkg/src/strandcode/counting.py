"""Exact counts of constrained sequences under a synthesis-time budget.

The counts are computed by dynamic programming over (length, last run,
[GC count], remaining time budget) states.  A sequence decomposes
uniquely into runs, and stripping the last run {a}^t leaves a shorter
sequence whose own last run carries a different symbol and whose time
budget shrinks by 4*(t-1) cycles for the repeats plus the cycle cost of
stepping from the previous symbol to a.  Counting therefore recurses on
strictly shorter lengths and memoizes every state.

Counts are arbitrary-precision integers (they outgrow 64 bits around
n = 32), so they cross interfaces as Python ints or decimal strings,
never as fixed-width numbers.

A counter's memo table is filled lazily; once a cell is written it never
changes, so a warmed counter can be shared read-only across threads.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import Run, gc_window, shifted_mod4


def clamp_time(T: int, n: int) -> int:
    """Normalize a time budget for length-n states onto [0, 4n].

    Any budget above 4n admits everything of length n and any budget
    below 0 admits nothing, so clamping loses no information and bounds
    the memo table size.
    """
    if T < 0:
        return 0
    limit = 4 * n
    return T if T < limit else limit


def run_order(ell: int) -> list[Run]:
    """All valid runs (symbol, length) with length <= ell, shortest first.

    This is the canonical bucket order used by the codecs: length-major,
    then symbol.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    return [(a, t) for t in range(1, ell + 1) for a in (1, 2, 3, 4)]


class RllCounter:
    """Counts length-n runlength-limited sequences with time budget T.

    One instance serves a single ell and memoizes across queries, so the
    codecs and sweep tools should share an instance where possible.
    """

    def __init__(self, ell: int):
        if ell < 1:
            raise ValueError("ell must be >= 1")
        self.ell = ell
        self._runs = run_order(ell)
        self._memo: dict[tuple[int, int, int, int], int] = {}

    def _check_run(self, run: Run) -> None:
        sym, length = run
        if not 1 <= sym <= 4:
            raise ValueError(f"invalid run symbol {sym}")
        if length < 1:
            raise ValueError(f"invalid run length {length}")
        if length > self.ell:
            raise ValueError(f"run length {length} exceeds ell={self.ell}")

    def count(self, n: int, run: Run, T: int) -> int:
        """Number of length-n sequences ending in exactly `run`, time <= T."""
        self._check_run(run)
        return self._count(n, run[0], run[1], clamp_time(T, n))

    def _count(self, n: int, sym: int, length: int, T: int) -> int:
        # T arrives clamped to [0, 4n].
        key = (n, sym, length, T)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        # The run costs 4*(length-1) for repeats, and reaching its symbol
        # costs at least sym cycles in total (cycle counts to a symbol are
        # congruent to it mod 4), so budgets below 4*(length-1)+sym are dead.
        if n < length or T < 4 * (length - 1) + sym:
            value = 0
        elif n == length:
            value = 1
        else:
            rest = n - length
            base = T - 4 * (length - 1)
            value = 0
            for sym2, len2 in self._runs:
                if sym2 == sym:
                    continue
                T2 = clamp_time(base - shifted_mod4(sym - sym2), rest)
                value += self._count(rest, sym2, len2, T2)
        self._memo[key] = value
        return value

    def total(self, n: int, T: int) -> int:
        """Number of length-n ell-RLL sequences with synthesis time <= T."""
        if n < 1:
            raise ValueError("n must be >= 1")
        Tc = clamp_time(T, n)
        return sum(self._count(n, sym, length, Tc) for sym, length in self._runs)


class BalancedCounter:
    """Counts runlength-limited sequences with a pinned GC count as well.

    The GC tolerance is not part of the state: states carry the absolute
    GC count m, and totals sum m over the window for whichever epsilon
    is asked, so one counter serves every epsilon at a given ell.
    """

    def __init__(self, ell: int):
        if ell < 1:
            raise ValueError("ell must be >= 1")
        self.ell = ell
        self._runs = run_order(ell)
        self._memo: dict[tuple[int, int, int, int, int], int] = {}

    def _check_run(self, run: Run) -> None:
        sym, length = run
        if not 1 <= sym <= 4:
            raise ValueError(f"invalid run symbol {sym}")
        if length < 1:
            raise ValueError(f"invalid run length {length}")
        if length > self.ell:
            raise ValueError(f"run length {length} exceeds ell={self.ell}")

    def count(self, n: int, run: Run, m: int, T: int) -> int:
        """Length-n sequences ending in `run` with GC count m, time <= T."""
        self._check_run(run)
        return self._count(n, run[0], run[1], m, clamp_time(T, n))

    def _count(self, n: int, sym: int, length: int, m: int, T: int) -> int:
        if m < 0 or m > n:
            return 0
        key = (n, sym, length, m, T)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        run_gc = length if sym > 2 else 0
        if n < length or T < 4 * (length - 1) + sym:
            value = 0
        elif n == length:
            value = 1 if run_gc == m else 0
        else:
            rest = n - length
            base = T - 4 * (length - 1)
            m2 = m - run_gc
            value = 0
            for sym2, len2 in self._runs:
                if sym2 == sym:
                    continue
                T2 = clamp_time(base - shifted_mod4(sym - sym2), rest)
                value += self._count(rest, sym2, len2, m2, T2)
        self._memo[key] = value
        return value

    def total(self, n: int, epsilon, T: int) -> int:
        """Length-n sequences that are ell-RLL, epsilon-balanced, time <= T."""
        if n < 1:
            raise ValueError("n must be >= 1")
        lo, hi = gc_window(n, epsilon)
        Tc = clamp_time(T, n)
        return sum(
            self._count(n, sym, length, m, Tc)
            for m in range(max(lo, 0), min(hi, n) + 1)
            for sym, length in self._runs
        )


def count_rll(n: int, run: Run, T: int, ell: int) -> int:
    """One-off N(n, run, T) for ell-RLL sequences; see RllCounter.count."""
    return RllCounter(ell).count(n, run, T)


def count_rll_total(n: int, ell: int, T: int) -> int:
    """One-off size of the ell-RLL, time-bounded code of length n."""
    return RllCounter(ell).total(n, T)


def count_balanced(n: int, run: Run, m: int, T: int, ell: int) -> int:
    """One-off N(n, run, m, T); see BalancedCounter.count."""
    return BalancedCounter(ell).count(n, run, m, T)


def count_balanced_total(n: int, ell: int, epsilon, T: int) -> int:
    """One-off size of the (ell, epsilon)-constrained, time-bounded code."""
    return BalancedCounter(ell).total(n, epsilon, T)


def floor_log2(count: int) -> int:
    """Largest k with 2**k <= count; the bit capacity of a code of that size."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return count.bit_length() - 1


def ceil_log4(x: int) -> int:
    """Smallest v >= 0 with 4**v >= x, computed exactly."""
    if x < 1:
        raise ValueError("x must be >= 1")
    if x == 1:
        return 0
    # 4**v >= x  <=>  2*v >= ceil(log2 x), and x > 1 makes that (x-1).bit_length().
    return -(-(x - 1).bit_length() // 2)


def redundancy_symbols(n: int, count: int) -> int:
    """Redundancy n - ceil(log4 count) of a size-`count` code of length n."""
    return n - ceil_log4(count)


def log2_float(count: int) -> float:
    """log2 of a possibly huge positive integer, as a float for display."""
    if count < 1:
        raise ValueError("count must be >= 1")
    bits = count.bit_length()
    if bits <= 53:
        return math.log2(count)
    return (bits - 53) + math.log2(count >> (bits - 53))
