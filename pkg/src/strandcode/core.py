"""Alphabet, runs, synthesis time, and constraint predicates.

Every other module speaks this vocabulary.  DNA symbols are the integers
1..4 standing for A, T, C, G in that order; sequences are plain tuples of
symbols.  The synthesis machine cycles through the fixed template
ATCGATCG..., appending the next template base to a strand only when that
strand wants it, so printing a symbol costs between 1 and 4 machine
cycles depending on the previous symbol.  The total cycle count is the
synthesis time of the strand.

All functions here are pure; values are immutable and safe to share
between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor

# A DNA sequence is a tuple of symbols, a run is (symbol, length).
Seq = tuple[int, ...]
Run = tuple[int, int]

ALPHABET = (1, 2, 3, 4)
BASES = "ATCG"

_BASE_TO_SYMBOL = {b: i + 1 for i, b in enumerate(BASES)}


def shifted_mod4(x: int) -> int:
    """Reduce x modulo 4 onto {1, 2, 3, 4} instead of {0, 1, 2, 3}.

    Multiples of 4 map to 4, so symbol arithmetic never produces 0:

    >>> shifted_mod4(4), shifted_mod4(0), shifted_mod4(-3)
    (4, 4, 1)
    """
    return (x - 1) % 4 + 1


def to_runs(c: Seq) -> list[Run]:
    """Split a sequence into its maximal runs, as (symbol, length) pairs.

    Concatenating the runs reproduces the sequence; adjacent runs always
    carry distinct symbols.  The empty sequence gives an empty list.
    """
    runs: list[Run] = []
    if not c:
        return runs
    sym = c[0]
    length = 1
    for x in c[1:]:
        if x == sym:
            length += 1
        else:
            runs.append((sym, length))
            sym = x
            length = 1
    runs.append((sym, length))
    return runs


def from_runs(runs: list[Run]) -> Seq:
    """Concatenate (symbol, length) runs back into a sequence."""
    out: list[int] = []
    for sym, length in runs:
        out.extend((sym,) * length)
    return tuple(out)


def diff_seq(c: Seq) -> tuple[int, ...]:
    """Differential sequence: first symbol, then shifted-mod-4 steps.

    Entry i is the number of machine cycles spent printing symbol i, so
    a repeated symbol costs a full template cycle of 4.
    """
    if not c:
        raise ValueError("empty sequence")
    prev = c[0]
    out = [prev]
    for x in c[1:]:
        out.append(shifted_mod4(x - prev))
        prev = x
    return tuple(out)


def undiff_seq(d: tuple[int, ...]) -> Seq:
    """Invert diff_seq: symbol i is the shifted-mod-4 running sum."""
    if not d:
        raise ValueError("empty sequence")
    total = 0
    out = []
    for step in d:
        total += step
        out.append(shifted_mod4(total))
    return tuple(out)


def synthesis_time(c: Seq) -> int:
    """Total machine cycles to synthesize c; always between n and 4n."""
    if not c:
        raise ValueError("empty sequence")
    prev = c[0]
    total = prev
    for x in c[1:]:
        total += shifted_mod4(x - prev)
        prev = x
    return total


def gc_content(c: Seq) -> int:
    """Number of C/G symbols (values 3 and 4)."""
    return sum(1 for x in c if x > 2)


def max_run_length(c: Seq) -> int:
    """Length of the longest run; 0 for the empty sequence."""
    best = 0
    cur = 0
    prev = 0
    for x in c:
        cur = cur + 1 if x == prev else 1
        prev = x
        if cur > best:
            best = cur
    return best


def is_rll(c: Seq, ell: int) -> bool:
    """True iff no run in c is longer than ell."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    return max_run_length(c) <= ell


def as_epsilon(epsilon) -> Fraction:
    """Validate a GC-balance tolerance and return it as an exact Fraction.

    Accepts Fraction, int, or a string like "1/10".  Floats are rejected
    because the balance window must be computed without rounding error.
    """
    if isinstance(epsilon, float):
        raise TypeError("epsilon must be an exact rational (Fraction, int, or 'p/q' string), not float")
    eps = Fraction(epsilon)
    if not 0 <= eps <= Fraction(1, 2):
        raise ValueError(f"epsilon {eps} outside [0, 1/2]")
    return eps


def gc_window(n: int, epsilon) -> tuple[int, int]:
    """Inclusive [lo, hi] range of admissible GC counts at length n.

    The window is [ceil((1/2 - eps) * n), floor((1/2 + eps) * n)].  It can
    be empty (lo > hi), e.g. at odd n with eps = 0.
    """
    eps = as_epsilon(epsilon)
    lo = ceil((Fraction(1, 2) - eps) * n)
    hi = floor((Fraction(1, 2) + eps) * n)
    return lo, hi


def is_balanced(c: Seq, epsilon) -> bool:
    """True iff the GC count of c lies in the gc_window for its length."""
    lo, hi = gc_window(len(c), epsilon)
    return lo <= gc_content(c) <= hi


def parse_dna(text: str) -> Seq:
    """Parse an uppercase ACGT string into a symbol tuple.

    >>> parse_dna("ACGT")
    (1, 3, 4, 2)
    """
    if not text:
        raise ValueError("empty sequence")
    out = []
    for i, ch in enumerate(text):
        sym = _BASE_TO_SYMBOL.get(ch)
        if sym is None:
            raise ValueError(f"invalid DNA character {ch!r} at offset {i}")
        out.append(sym)
    return tuple(out)


def format_dna(c: Seq) -> str:
    """Render a symbol tuple as an uppercase ACGT string."""
    if not c:
        raise ValueError("empty sequence")
    try:
        return "".join(BASES[x - 1] for x in c)
    except IndexError:
        raise ValueError(f"symbol outside 1..4 in {c!r}") from None


def check_symbols(c: Seq) -> None:
    """Raise ValueError if any element of c is not a symbol in 1..4."""
    for i, x in enumerate(c):
        if not isinstance(x, int) or not 1 <= x <= 4:
            raise ValueError(f"invalid symbol {x!r} at position {i}")
