"""Piecewise-linear change of string datum under a single braid move."""

from mvpoly.apps.core.exceptions import InvalidPositionError, UnsupportedTypeError
from mvpoly.apps.rootdatum.datum import RootDatum
from mvpoly.apps.weyl.types import BraidMove

from .types import StringDatum


def _commuting(q: tuple[int, ...]) -> tuple[int, ...]:
    q1, q2 = q
    return (q2, q1)


def _simply_laced(q: tuple[int, ...]) -> tuple[int, ...]:
    q1, q2, q3 = q
    return (max(q3, q2 - q1), q1 + q3, min(q1, q2 - q3))


def _long_first(q: tuple[int, ...]) -> tuple[int, ...]:
    """Block (i, j, i, j) with a_ij = -1 and a_ji = -2."""
    q1, q2, q3, q4 = q
    return (
        max(q4, q3 - q2, q2 - q1),
        max(q3, q1 - 2 * q2 + 2 * q3, q1 + 2 * q4),
        min(q2, 2 * q2 - q3 + q4, q4 + q1),
        min(q1, 2 * q2 - q3, q3 - 2 * q4),
    )


def _short_first(q: tuple[int, ...]) -> tuple[int, ...]:
    """Block (i, j, i, j) with a_ij = -2 and a_ji = -1."""
    q1, q2, q3, q4 = q
    return (
        max(q4, 2 * q3 - q2, q2 - 2 * q1),
        max(q3, q1 - q2 + 2 * q3, q1 + q4),
        min(q2, 2 * q2 - 2 * q3 + q4, q4 + 2 * q1),
        min(q1, q2 - q3, q3 - q4),
    )


def braid_transition(datum: RootDatum, p: StringDatum, move: BraidMove) -> StringDatum:
    """Apply a braid move to the word of p and transform p accordingly."""
    i, j = move.letters
    k, d = move.position, move.length
    word = p.word
    if d != datum.braid_order(i, j):
        raise InvalidPositionError(f"Move of length {d} does not match the order of s_{i} s_{j}")
    if k < 0 or k + d > len(word):
        raise InvalidPositionError(f"Move at {k} runs past the end of {word}")
    block = word[k : k + d]
    if any(block[t] != (i if t % 2 == 0 else j) for t in range(d)):
        raise InvalidPositionError(f"No alternating block ({i}, {j}, ...) at position {k} of {word}")

    q = p.p[k : k + d]
    if d == 2:
        flipped = _commuting(q)
    elif d == 3:
        flipped = _simply_laced(q)
    elif d == 4 and datum.a(i, j) == -1:
        flipped = _long_first(q)
    elif d == 4:
        flipped = _short_first(q)
    else:
        raise UnsupportedTypeError(f"No transition map for braid moves of length {d}")

    new_block = tuple(j if t % 2 == 0 else i for t in range(d))
    return StringDatum(
        word[:k] + new_block + word[k + d :],
        p.p[:k] + flipped + p.p[k + d :],
    )
