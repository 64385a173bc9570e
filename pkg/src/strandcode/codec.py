"""Enumerative (rank/unrank) codecs for the constrained sequence sets.

The code is the *whole* constrained set, sorted under a fixed total
order, so the rate is the best possible: message M maps to the M-th
smallest valid sequence and back.

Ordering.  Sequences of equal length compare by their last run first
(shorter run smaller; ties by symbol A < T < C < G), and ties recurse on
what remains once the last run is stripped.  The GC-balanced codec
compares GC count before anything else.  Because stripping the last run
also pins how much of the time budget it consumed, the sorted code
decomposes into nested buckets whose sizes the counters already know:
unranking walks buckets accumulating sizes until it brackets M, then
descends; ranking mirrors the walk.  Each descent fixes the previous
run before computing the child's remaining budget, so every recursive
bucket is fully determined.

Codecs memoize their bucket walks, so repeated rank/unrank calls on one
instance are O(n) dictionary work.  A warmed codec is safe to share
read-only across threads.
"""

from __future__ import annotations

from bisect import bisect_left

from .core import (
    Run,
    Seq,
    check_symbols,
    gc_content,
    gc_window,
    shifted_mod4,
    synthesis_time,
    to_runs,
)
from .counting import BalancedCounter, RllCounter, clamp_time, floor_log2, run_order


def run_less(s1: Run, s2: Run) -> bool:
    """Strict total order on runs: length-major, then symbol."""
    a1, t1 = s1
    a2, t2 = s2
    return (t1, a1) < (t2, a2)


def seq_less(c1: Seq, c2: Seq) -> bool:
    """Strict order on equal-length sequences; see the module docstring."""
    if len(c1) != len(c2):
        raise ValueError(f"cannot order sequences of different lengths {len(c1)} and {len(c2)}")
    for (a1, t1), (a2, t2) in zip(reversed(to_runs(c1)), reversed(to_runs(c2))):
        if (a1, t1) != (a2, t2):
            return (t1, a1) < (t2, a2)
    return False


def pair_less(p1: tuple[Run, int], p2: tuple[Run, int]) -> bool:
    """Order on (last run, GC count) buckets: GC-major, then run order."""
    (a1, t1), m1 = p1
    (a2, t2), m2 = p2
    return (m1, t1, a1) < (m2, t2, a2)


def rll_sort_key(c: Seq) -> tuple:
    """Sort key equivalent to seq_less: reversed (length, symbol) run pairs."""
    return tuple((t, a) for (a, t) in reversed(to_runs(c)))


def balanced_sort_key(c: Seq) -> tuple:
    """Sort key for the GC-balanced order: GC count, then the run key."""
    return (gc_content(c), rll_sort_key(c))


def bits_to_rank(bits: str) -> int:
    """Map a 0/1 message string (MSB first) to a 1-based rank."""
    for ch in bits:
        if ch not in "01":
            raise ValueError(f"message must contain only 0 and 1, got {ch!r}")
    return (int(bits, 2) if bits else 0) + 1


def rank_to_bits(M: int, k_bits: int) -> str:
    """Inverse of bits_to_rank for ranks inside the message space."""
    value = M - 1
    if value < 0 or value >= (1 << k_bits):
        raise ValueError(f"rank {M} is outside the {k_bits}-bit message space")
    return format(value, f"0{k_bits}b") if k_bits else ""


class RllCodec:
    """Rank/unrank codec for length-n ell-RLL sequences with time <= T.

    Raises ValueError at construction if the parameters admit no
    sequence at all (e.g. T < n).
    """

    def __init__(self, n: int, ell: int, T: int, counter: RllCounter | None = None):
        if n < 1:
            raise ValueError("n must be >= 1")
        if counter is None:
            counter = RllCounter(ell)
        elif counter.ell != ell:
            raise ValueError(f"shared counter has ell={counter.ell}, expected {ell}")
        self.n = n
        self.ell = ell
        self.T = T
        self._counter = counter
        self._runs = run_order(ell)
        self._walks: dict[tuple, tuple] = {}
        self._top = self._build_top()
        self.total = self._top[1][-1] if self._top[1] else 0
        if self.total == 0:
            raise ValueError(f"empty code: no length-{n} {ell}-RLL sequence has synthesis time <= {T}")
        self.k_bits = floor_log2(self.total)

    def _build_top(self):
        Tc = clamp_time(self.T, self.n)
        kids, cums, pos = [], [], {}
        acc = 0
        for sym, length in self._runs:
            acc += self._counter.count(self.n, (sym, length), Tc)
            pos[(sym, length)] = len(kids)
            kids.append((self.n, sym, length, Tc))
            cums.append(acc)
        return kids, cums, pos

    def _walk(self, state):
        cached = self._walks.get(state)
        if cached is not None:
            return cached
        n, sym, length, T = state
        rest = n - length
        base = T - 4 * (length - 1)
        kids, cums, pos = [], [], {}
        acc = 0
        for sym2, len2 in self._runs:
            if sym2 == sym:
                continue
            T2 = clamp_time(base - shifted_mod4(sym - sym2), rest)
            acc += self._counter.count(rest, (sym2, len2), T2)
            pos[(sym2, len2)] = len(kids)
            kids.append((rest, sym2, len2, T2))
            cums.append(acc)
        walk = (kids, cums, pos)
        self._walks[state] = walk
        return walk

    def unrank(self, M: int) -> Seq:
        """The M-th smallest codeword, M in [1, total]."""
        if not 1 <= M <= self.total:
            raise ValueError(f"rank {M} outside [1, {self.total}]")
        kids, cums, _ = self._top
        runs_backward = []
        while True:
            i = bisect_left(cums, M)
            if i:
                M -= cums[i - 1]
            state = kids[i]
            runs_backward.append((state[1], state[2]))
            if state[0] == state[2]:  # length of state == run length: first run
                break
            kids, cums, _ = self._walk(state)
        out: list[int] = []
        for sym, length in reversed(runs_backward):
            out.extend((sym,) * length)
        return tuple(out)

    def validate(self, c: Seq) -> list[Run]:
        """Check membership in the code; returns the run decomposition."""
        if len(c) != self.n:
            raise ValueError(f"length {len(c)} does not match code length {self.n}")
        check_symbols(c)
        runs = to_runs(c)
        for _, length in runs:
            if length > self.ell:
                raise ValueError(f"run length {length} violates the {self.ell}-RLL constraint")
        t = synthesis_time(c)
        if t > self.T:
            raise ValueError(f"synthesis time {t} exceeds the budget T={self.T}")
        return runs

    def rank(self, c: Seq) -> int:
        """Position of codeword c in the sorted code, in [1, total]."""
        runs = self.validate(c)
        M = 1
        kids, cums, pos = self._top
        for j in range(len(runs) - 1, -1, -1):
            i = pos[runs[j]]
            if i:
                M += cums[i - 1]
            if j == 0:
                break
            kids, cums, pos = self._walk(kids[i])
        return M

    def encode_bits(self, bits: str) -> Seq:
        """Encode a k_bits-long 0/1 string as a codeword."""
        if len(bits) != self.k_bits:
            raise ValueError(f"message must be exactly {self.k_bits} bits, got {len(bits)}")
        return self.unrank(bits_to_rank(bits))

    def decode_bits(self, c: Seq) -> str:
        """Recover the 0/1 message from a codeword produced by encode_bits."""
        return rank_to_bits(self.rank(c), self.k_bits)

    def iter_codewords(self):
        """Yield every codeword in rank order (rank 1 first)."""
        top_kids, top_cums, _ = self._top
        # Frames: [kids, cums, next index, cumulative count consumed so far,
        # whether this frame appended a run to `path`].
        frames = [[top_kids, top_cums, 0, 0, False]]
        path: list[Run] = []
        while frames:
            frame = frames[-1]
            kids, cums, i, prev = frame[0], frame[1], frame[2], frame[3]
            advanced = False
            while i < len(kids):
                count_here = cums[i] - prev
                prev = cums[i]
                i += 1
                if count_here:
                    frame[2], frame[3] = i, prev
                    state = kids[i - 1]
                    run = (state[1], state[2])
                    if state[0] == state[2]:
                        out: list[int] = []
                        path.append(run)
                        for sym, length in reversed(path):
                            out.extend((sym,) * length)
                        path.pop()
                        yield tuple(out)
                    else:
                        path.append(run)
                        sub_kids, sub_cums, _ = self._walk(state)
                        frames.append([sub_kids, sub_cums, 0, 0, True])
                    advanced = True
                    break
            if not advanced:
                frames.pop()
                if frame[4]:
                    path.pop()


class BalancedCodec:
    """Rank/unrank codec with the GC count constrained as well.

    Buckets are (GC count, last run) pairs in GC-major order; every
    descent pins the remaining prefix's GC count exactly, so deeper
    levels walk runs only.
    """

    def __init__(self, n: int, ell: int, epsilon, T: int,
                 counter: BalancedCounter | None = None):
        if n < 1:
            raise ValueError("n must be >= 1")
        if counter is None:
            counter = BalancedCounter(ell)
        elif counter.ell != ell:
            raise ValueError(f"shared counter has ell={counter.ell}, expected {ell}")
        self.n = n
        self.ell = ell
        self.T = T
        self.gc_lo, self.gc_hi = gc_window(n, epsilon)
        self.epsilon = epsilon
        self._counter = counter
        self._runs = run_order(ell)
        self._walks: dict[tuple, tuple] = {}
        self._top = self._build_top()
        self.total = self._top[1][-1] if self._top[1] else 0
        if self.total == 0:
            raise ValueError(
                f"empty code: no length-{n} sequence satisfies {ell}-RLL, "
                f"GC in [{self.gc_lo}, {self.gc_hi}] and synthesis time <= {T}"
            )
        self.k_bits = floor_log2(self.total)

    def _build_top(self):
        Tc = clamp_time(self.T, self.n)
        kids, cums, pos = [], [], {}
        acc = 0
        for m in range(max(self.gc_lo, 0), min(self.gc_hi, self.n) + 1):
            for sym, length in self._runs:
                acc += self._counter.count(self.n, (sym, length), m, Tc)
                pos[(m, sym, length)] = len(kids)
                kids.append((self.n, sym, length, m, Tc))
                cums.append(acc)
        return kids, cums, pos

    def _walk(self, state):
        cached = self._walks.get(state)
        if cached is not None:
            return cached
        n, sym, length, m, T = state
        rest = n - length
        base = T - 4 * (length - 1)
        m2 = m - (length if sym > 2 else 0)
        kids, cums, pos = [], [], {}
        acc = 0
        for sym2, len2 in self._runs:
            if sym2 == sym:
                continue
            T2 = clamp_time(base - shifted_mod4(sym - sym2), rest)
            acc += self._counter.count(rest, (sym2, len2), m2, T2)
            pos[(sym2, len2)] = len(kids)
            kids.append((rest, sym2, len2, m2, T2))
            cums.append(acc)
        walk = (kids, cums, pos)
        self._walks[state] = walk
        return walk

    def unrank(self, M: int) -> Seq:
        """The M-th smallest codeword, M in [1, total]."""
        if not 1 <= M <= self.total:
            raise ValueError(f"rank {M} outside [1, {self.total}]")
        kids, cums, _ = self._top
        runs_backward = []
        while True:
            i = bisect_left(cums, M)
            if i:
                M -= cums[i - 1]
            state = kids[i]
            runs_backward.append((state[1], state[2]))
            if state[0] == state[2]:
                break
            kids, cums, _ = self._walk(state)
        out: list[int] = []
        for sym, length in reversed(runs_backward):
            out.extend((sym,) * length)
        return tuple(out)

    def validate(self, c: Seq) -> list[Run]:
        """Check membership in the code; returns the run decomposition."""
        if len(c) != self.n:
            raise ValueError(f"length {len(c)} does not match code length {self.n}")
        check_symbols(c)
        runs = to_runs(c)
        for _, length in runs:
            if length > self.ell:
                raise ValueError(f"run length {length} violates the {self.ell}-RLL constraint")
        m = gc_content(c)
        if not self.gc_lo <= m <= self.gc_hi:
            raise ValueError(f"GC count {m} outside the balance window [{self.gc_lo}, {self.gc_hi}]")
        t = synthesis_time(c)
        if t > self.T:
            raise ValueError(f"synthesis time {t} exceeds the budget T={self.T}")
        return runs

    def rank(self, c: Seq) -> int:
        """Position of codeword c in the sorted code, in [1, total]."""
        runs = self.validate(c)
        M = 1
        kids, cums, pos = self._top
        i = pos[(gc_content(c), runs[-1][0], runs[-1][1])]
        if i:
            M += cums[i - 1]
        for j in range(len(runs) - 1, 0, -1):
            kids, cums, pos = self._walk(kids[i])
            i = pos[runs[j - 1]]
            if i:
                M += cums[i - 1]
        return M

    def encode_bits(self, bits: str) -> Seq:
        """Encode a k_bits-long 0/1 string as a codeword."""
        if len(bits) != self.k_bits:
            raise ValueError(f"message must be exactly {self.k_bits} bits, got {len(bits)}")
        return self.unrank(bits_to_rank(bits))

    def decode_bits(self, c: Seq) -> str:
        """Recover the 0/1 message from a codeword produced by encode_bits."""
        return rank_to_bits(self.rank(c), self.k_bits)

    def iter_codewords(self):
        """Yield every codeword in rank order (rank 1 first)."""
        top_kids, top_cums, _ = self._top
        frames = [[top_kids, top_cums, 0, 0, False]]
        path: list[Run] = []
        while frames:
            frame = frames[-1]
            kids, cums, i, prev = frame[0], frame[1], frame[2], frame[3]
            advanced = False
            while i < len(kids):
                count_here = cums[i] - prev
                prev = cums[i]
                i += 1
                if count_here:
                    frame[2], frame[3] = i, prev
                    state = kids[i - 1]
                    run = (state[1], state[2])
                    if state[0] == state[2]:
                        out: list[int] = []
                        path.append(run)
                        for sym, length in reversed(path):
                            out.extend((sym,) * length)
                        path.pop()
                        yield tuple(out)
                    else:
                        path.append(run)
                        sub_kids, sub_cums, _ = self._walk(state)
                        frames.append([sub_kids, sub_cums, 0, 0, True])
                    advanced = True
                    break
            if not advanced:
                frames.pop()
                if frame[4]:
                    path.pop()


def unrank_rll(M: int, n: int, ell: int, T: int) -> Seq:
    """One-off unrank; build an RllCodec instead for repeated calls."""
    return RllCodec(n, ell, T).unrank(M)


def rank_rll(c: Seq, ell: int, T: int) -> int:
    """One-off rank; build an RllCodec instead for repeated calls."""
    return RllCodec(len(c), ell, T).rank(c)


def encode_bits_rll(bits: str, n: int, ell: int, T: int) -> Seq:
    """One-off bit-string encode into the ell-RLL time-bounded code."""
    return RllCodec(n, ell, T).encode_bits(bits)


def decode_bits_rll(c: Seq, ell: int, T: int) -> str:
    """One-off decode; inverse of encode_bits_rll."""
    return RllCodec(len(c), ell, T).decode_bits(c)


def unrank_balanced(M: int, n: int, ell: int, epsilon, T: int) -> Seq:
    """One-off unrank in the GC-balanced code."""
    return BalancedCodec(n, ell, epsilon, T).unrank(M)


def rank_balanced(c: Seq, ell: int, epsilon, T: int) -> int:
    """One-off rank in the GC-balanced code."""
    return BalancedCodec(len(c), ell, epsilon, T).rank(c)


def encode_bits_balanced(bits: str, n: int, ell: int, epsilon, T: int) -> Seq:
    """One-off bit-string encode into the GC-balanced code."""
    return BalancedCodec(n, ell, epsilon, T).encode_bits(bits)


def decode_bits_balanced(c: Seq, ell: int, epsilon, T: int) -> str:
    """One-off decode; inverse of encode_bits_balanced."""
    return BalancedCodec(len(c), ell, epsilon, T).decode_bits(c)
