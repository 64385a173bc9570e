"""Single-indel error correction on top of the constrained codec.

A codeword is a constrained data block followed by a short parity block:

    data (k1 symbols) || x x x' x'  beta beta'  t1 t1' ... tv tv'  b b'

where x is the data's last symbol stepped by 2 (so the boundary never
extends a data run), primes are symbol complements (5 - symbol), t1..tv
are the base-4 digits of the VT syndrome of the data signature modulo n,
and b is the shifted-mod-4 symbol sum.  Every parity symbol is paired
with its complement, which caps parity runs at length 2 and gives the
parity block a GC count of exactly v + 4, so the codeword keeps the
runlength constraint (for ell >= 2) and inherits the data block's GC
balance up to that fixed offset.

The decoder dispatches on the received length.  At length n nothing
happened.  Otherwise the doubled symbol right after the data block
tells whether the edit hit the data: if the two symbols at positions
k1+1 and k1+2 still agree, the edit landed in the parity and the data
is intact; if they disagree, the syndromes are read from their shifted
positions (b is always second-to-last) and the VT search repairs the
data block.
"""

from __future__ import annotations

from .codec import BalancedCodec
from .core import Seq, check_symbols, shifted_mod4
from .counting import BalancedCounter, ceil_log4
from .vt import compute_syndromes, digits_base4, undigits_base4, vt_decode_deletion, vt_decode_insertion


def complement(a: int) -> int:
    """The GC-swapping symbol complement 5 - a (A<->G, T<->C)."""
    if not 1 <= a <= 4:
        raise ValueError(f"invalid symbol {a}")
    return 5 - a


def indel_ball(c: Seq) -> set[Seq]:
    """All sequences reachable from c by exactly one insertion or deletion."""
    c = tuple(c)
    ball: set[Seq] = set()
    for p in range(len(c)):
        ball.add(c[:p] + c[p + 1:])
    for p in range(len(c) + 1):
        head, tail = c[:p], c[p:]
        for sym in (1, 2, 3, 4):
            ball.add(head + (sym,) + tail)
    return ball


def codeword_length_for_data(k1: int) -> int:
    """Smallest consistent codeword length n = k1 + 2*ceil(log4 n) + 8."""
    if k1 < 1:
        raise ValueError("k1 must be >= 1")
    n = k1 + 10
    for _ in range(64):
        n2 = k1 + 2 * ceil_log4(n) + 8
        if n2 == n:
            return n
        n = n2
    raise RuntimeError(f"no consistent codeword length for k1={k1}")


class IndelEccCode:
    """Constrained code of length n correcting one insertion or deletion.

    Parameters are the codeword length n, runlength bound ell >= 2, GC
    tolerance epsilon, and synthesis-time budget T for the whole
    codeword.  The parity block consumes 2*ceil(log4 n) + 8 symbols and
    4 cycles each, leaving the data block k1 symbols and budget T1.
    Construction fails if that leaves no feasible data code.
    """

    def __init__(self, n: int, ell: int, epsilon, T: int,
                 counter: BalancedCounter | None = None):
        if ell < 2:
            raise ValueError("ell must be >= 2: the parity block contains length-2 runs")
        self.n = n
        self.ell = ell
        self.T = T
        self.v = ceil_log4(n)
        self.parity_len = 2 * self.v + 8
        self.k1 = n - self.parity_len
        if self.k1 < 1:
            raise ValueError(
                f"infeasible: n={n} leaves {self.k1} data symbols "
                f"after {self.parity_len} parity symbols"
            )
        self.T1 = T - 4 * self.parity_len
        if self.T1 < self.k1:
            raise ValueError(f"infeasible: data time budget {self.T1} cannot cover {self.k1} symbols")
        self.inner = BalancedCodec(self.k1, ell, epsilon, self.T1, counter)
        self.epsilon = self.inner.epsilon
        self.k_bits = self.inner.k_bits

    def build_parity(self, data: Seq) -> Seq:
        """Parity block for a data word (exposed for inspection and tests)."""
        if len(data) != self.k1:
            raise ValueError(f"data length {len(data)} does not match k1={self.k1}")
        alpha = data[-1]
        marker = shifted_mod4(alpha + 2)
        beta = 1 if complement(marker) != 1 else 2
        a, b = compute_syndromes(data, self.n)
        parity = [marker, marker, complement(marker), complement(marker), beta, complement(beta)]
        for digit in digits_base4(a, self.v):
            parity.append(digit)
            parity.append(complement(digit))
        parity.append(b)
        parity.append(complement(b))
        return tuple(parity)

    def encode(self, bits: str) -> Seq:
        """Encode a k_bits-long 0/1 message into a length-n codeword."""
        data = self.inner.encode_bits(bits)
        return data + self.build_parity(data)

    def decode(self, y: Seq) -> str:
        """Recover the message from a codeword, possibly after one indel."""
        y = tuple(y)
        check_symbols(y)
        n, k1, v = self.n, self.k1, self.v
        if len(y) == n:
            return self.inner.decode_bits(y[:k1])
        if len(y) == n + 1:
            if y[k1] == y[k1 + 1]:
                # The insertion landed at or beyond the doubled marker.
                return self.inner.decode_bits(y[:k1])
            a = undigits_base4(y[k1 + 7: k1 + 7 + 2 * v: 2])
            b = y[-2]
            data = vt_decode_insertion(y[:k1 + 1], k1, (a, b), n)
            return self.inner.decode_bits(data)
        if len(y) == n - 1:
            if y[k1] == y[k1 + 1]:
                # The deletion landed beyond the doubled marker.
                return self.inner.decode_bits(y[:k1])
            a = undigits_base4(y[k1 + 5: k1 + 5 + 2 * v: 2])
            b = y[-2]
            data = vt_decode_deletion(y[:k1 - 1], k1, (a, b), n)
            return self.inner.decode_bits(data)
        raise ValueError(f"length {len(y)} out of range [{n - 1}, {n + 1}]")


def ecc_encode(bits: str, n: int, ell: int, epsilon, T: int) -> Seq:
    """One-off ECC encode; build an IndelEccCode for repeated calls."""
    return IndelEccCode(n, ell, epsilon, T).encode(bits)


def ecc_decode(y: Seq, n: int, ell: int, epsilon, T: int) -> str:
    """One-off ECC decode; build an IndelEccCode for repeated calls."""
    return IndelEccCode(n, ell, epsilon, T).decode(y)
