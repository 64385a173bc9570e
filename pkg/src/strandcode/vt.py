"""Varshamov-Tenengolts style syndromes and the single-indel decode step.

A quaternary word is protected against one insertion or deletion by two
checks: the VT syndrome of its binary signature (position-weighted sum
of the "did not decrease" indicator between neighbours) reduced modulo
the enclosing codeword length, and the shifted-mod-4 symbol sum.

Decoding is an exhaustive candidate search over the single-edit
neighbours of the received word, keeping those whose syndromes match.
The symbol-sum check pins the edited symbol value outright, and the VT
check then pins the original word uniquely, so all survivors are the
same sequence; a survivor set with two distinct sequences would mean the
syndromes cannot protect this word and is reported as an internal
inconsistency.  The search is O(k^2) per decode, which is plenty fast at
the word sizes the parity layer produces.
"""

from __future__ import annotations

from .core import Seq, shifted_mod4


class UncorrectableError(ValueError):
    """No candidate word matches the received syndromes."""


def signature(c: Seq) -> tuple[int, ...]:
    """Binary signature of c: bit i is 1 iff c[i+1] >= c[i].

    One bit per adjacent pair, so a length-n word has an (n-1)-bit
    signature and a single symbol has an empty one.
    """
    if not c:
        raise ValueError("empty sequence")
    return tuple(1 if b >= a else 0 for a, b in zip(c, c[1:]))


def vt_syndrome(bits) -> int:
    """Position-weighted sum of a bit vector, positions numbered from 1."""
    return sum(i * b for i, b in enumerate(bits, start=1))


def compute_syndromes(c: Seq, modulus: int) -> tuple[int, int]:
    """Syndrome pair (a, b) of a data word inside a length-`modulus` codeword.

    a is the VT syndrome of the signature, reduced modulo the full
    codeword length; b is the shifted-mod-4 symbol sum, so b is itself a
    symbol in 1..4 and can be stored directly in the parity.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    a = vt_syndrome(signature(c)) % modulus
    b = shifted_mod4(sum(c))
    return a, b


def digits_base4(a: int, v: int) -> tuple[int, ...]:
    """The v base-4 digits of a (most significant first), as symbols 1..4.

    Digit d is stored as symbol d+1 so digits can ride in the parity
    block and take complements.
    """
    if v < 0:
        raise ValueError("v must be >= 0")
    if not 0 <= a < 4**v:
        raise ValueError(f"{a} does not fit in {v} base-4 digits")
    out = []
    for shift in range(2 * (v - 1), -2, -2):
        out.append(((a >> shift) & 3) + 1)
    return tuple(out)


def undigits_base4(symbols: Seq) -> int:
    """Inverse of digits_base4: symbol digits back to the integer."""
    a = 0
    for s in symbols:
        if not 1 <= s <= 4:
            raise ValueError(f"invalid digit symbol {s}")
        a = (a << 2) | (s - 1)
    return a


def _unique_survivor(found: set[Seq]) -> Seq:
    if not found:
        raise UncorrectableError("uncorrectable: no candidate matches the syndromes")
    if len(found) > 1:
        raise RuntimeError(f"ambiguous: {len(found)} distinct candidates match the syndromes")
    return found.pop()


def vt_decode_deletion(y: Seq, k: int, syndromes: tuple[int, int], modulus: int) -> Seq:
    """Recover the length-k word from y, which lost one symbol.

    Tries reinserting a symbol at every position of y.  The symbol-sum
    syndrome already determines which symbol was lost, so only the VT
    check varies over positions.
    """
    if len(y) != k - 1:
        raise ValueError(f"expected a word of length {k - 1}, got {len(y)}")
    a_want, b_want = syndromes
    y = tuple(y)
    lost = shifted_mod4(b_want - sum(y))
    found: set[Seq] = set()
    for p in range(k):
        cand = y[:p] + (lost,) + y[p:]
        if vt_syndrome(signature(cand)) % modulus == a_want:
            found.add(cand)
    return _unique_survivor(found)


def vt_decode_insertion(y: Seq, k: int, syndromes: tuple[int, int], modulus: int) -> Seq:
    """Recover the length-k word from y, which gained one symbol.

    Tries deleting each position of y whose symbol is consistent with
    the symbol-sum syndrome and keeps the candidates that pass the VT
    check.
    """
    if len(y) != k + 1:
        raise ValueError(f"expected a word of length {k + 1}, got {len(y)}")
    a_want, b_want = syndromes
    y = tuple(y)
    gained = shifted_mod4(sum(y) - b_want)
    found: set[Seq] = set()
    for p in range(k + 1):
        if y[p] != gained:
            continue
        cand = y[:p] + y[p + 1:]
        if vt_syndrome(signature(cand)) % modulus == a_want:
            found.add(cand)
    return _unique_survivor(found)
