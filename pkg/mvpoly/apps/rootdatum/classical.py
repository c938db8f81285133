"""
Built-in classical types and the classical coordinate systems.

Type A_{n-1} uses vectors of length n: weights are read modulo (1,...,1) and
coweights have coordinate sum zero. Type C_n uses vectors of length n with
the long simple root alpha_n = 2 e_n, so alpha_n^vee = e_n and the chamber
weights are the signed subsets of {1,...,n}.
"""

import re
from functools import lru_cache

from mvpoly.apps.core.exceptions import (
    CartanMatrixError,
    ClassicalCoordsError,
    UnsupportedTypeError,
)

from .datum import RootDatum
from .types import CartanMatrix, ClassicalCoords, ClassicalKind, Coweight, LatticeRole, Weight

TYPE_NAME_RE = re.compile(r"^([A-Z])(\d+)$")
SIGNED_TOKEN_RE = re.compile(r"(-?)(\d)")


def _type_a_cartan(r: int) -> CartanMatrix:
    return CartanMatrix(
        tuple(
            tuple(2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(r))
            for i in range(r)
        )
    )


def _type_c_cartan(r: int) -> CartanMatrix:
    rows = [list(row) for row in _type_a_cartan(r).entries]
    rows[r - 2][r - 1] = -2
    return CartanMatrix.from_rows(rows)


@lru_cache(maxsize=None)
def type_a(r: int) -> RootDatum:
    if r < 1:
        raise CartanMatrixError("Type A needs rank at least 1")
    return RootDatum(_type_a_cartan(r), name=f"A{r}", kind=ClassicalKind.A)


@lru_cache(maxsize=None)
def type_c(r: int) -> RootDatum:
    if r < 2:
        raise CartanMatrixError("Type C needs rank at least 2")
    return RootDatum(_type_c_cartan(r), name=f"C{r}", kind=ClassicalKind.C)


def cartan_type(name: str) -> RootDatum:
    """Look up a built-in type by name, e.g. "A2" or "C3"."""
    match = TYPE_NAME_RE.match(name.strip().upper())
    if not match:
        raise CartanMatrixError(f"Unrecognised type name: {name!r}")
    letter, rank = match.group(1), int(match.group(2))
    if letter == "A":
        return type_a(rank)
    if letter == "C":
        return type_c(rank)
    if letter == "G":
        raise UnsupportedTypeError("Type G2 is not supported")
    raise CartanMatrixError(f"Type {name} is not built in")


def from_cartan(rows, kind: ClassicalKind | None = None) -> RootDatum:
    """
    Build a root datum from matrix rows, reusing a built-in type when it matches.

    A kind hint that does not match the matrix is an error.
    """
    cartan = CartanMatrix.from_rows(rows)
    candidates = []
    if cartan.rank >= 1:
        candidates.append(type_a)
    if cartan.rank >= 2:
        candidates.append(type_c)
    for build in candidates:
        datum = build(cartan.rank)
        if datum.cartan == cartan:
            if kind is not None and datum.kind != kind:
                raise ClassicalCoordsError(f"Cartan matrix is {datum.name}, not type {kind.value}")
            return datum
    if kind is not None:
        raise ClassicalCoordsError(f"Cartan matrix is not of classical type {kind.value}")
    return RootDatum(cartan)


def _require_kind(datum: RootDatum, x: ClassicalCoords | None = None) -> ClassicalKind:
    if datum.kind is None:
        raise ClassicalCoordsError(f"{datum!r} has no classical coordinates")
    if x is not None and x.kind != datum.kind:
        raise ClassicalCoordsError(f"Coordinates of kind {x.kind.value} given for {datum.name}")
    return datum.kind


def classical_length(datum: RootDatum) -> int:
    kind = _require_kind(datum)
    return datum.rank + 1 if kind == ClassicalKind.A else datum.rank


def from_classical(
    datum: RootDatum,
    x: ClassicalCoords,
    role: LatticeRole = LatticeRole.WEIGHT,
) -> Weight | Coweight:
    kind = _require_kind(datum, x)
    v = tuple(x.vector)
    if len(v) != classical_length(datum):
        raise ClassicalCoordsError(
            f"{datum.name} expects {classical_length(datum)} classical coordinates, got {len(v)}"
        )
    if any(not isinstance(c, int) for c in v):
        raise ClassicalCoordsError(f"Classical coordinates must be integers: {v}")

    r = datum.rank
    if role == LatticeRole.WEIGHT:
        if kind == ClassicalKind.A:
            return tuple(v[i] - v[i + 1] for i in range(r))
        return tuple(v[i] - v[i + 1] for i in range(r - 1)) + (v[r - 1],)

    if kind == ClassicalKind.A and sum(v) != 0:
        raise ClassicalCoordsError(f"Type A coweight must have coordinate sum 0: {v}")
    prefix, total = [], 0
    for c in v[:r]:
        total += c
        prefix.append(total)
    return tuple(prefix)


def to_classical(
    datum: RootDatum,
    coords: Weight | Coweight,
    role: LatticeRole = LatticeRole.WEIGHT,
) -> ClassicalCoords:
    """
    Inverse of from_classical.

    Type A weights are only defined modulo (1,...,1); the representative with
    smallest entry 0 is returned.
    """
    kind = _require_kind(datum)
    r = datum.rank
    if len(coords) != r:
        raise ClassicalCoordsError(f"{datum.name} coordinates must have length {r}")

    if role == LatticeRole.WEIGHT:
        if kind == ClassicalKind.A:
            v = [0] * (r + 1)
            for i in range(r - 1, -1, -1):
                v[i] = v[i + 1] + coords[i]
            low = min(v)
            return ClassicalCoords(kind, tuple(c - low for c in v))
        v = [0] * r
        v[r - 1] = coords[r - 1]
        for i in range(r - 2, -1, -1):
            v[i] = v[i + 1] + coords[i]
        return ClassicalCoords(kind, tuple(v))

    x = [coords[0]] + [coords[i] - coords[i - 1] for i in range(1, r)]
    if kind == ClassicalKind.A:
        x.append(-coords[r - 1])
    return ClassicalCoords(kind, tuple(x))


def chamber_name(datum: RootDatum, weight: Weight) -> str:
    """
    Name a chamber weight: a subset such as "13" in type A, a signed subset
    such as "1-23" in type C.
    """
    vector = to_classical(datum, weight).vector
    if datum.kind == ClassicalKind.A:
        if any(c not in (0, 1) for c in vector):
            raise ClassicalCoordsError(f"{vector} is not a subset weight")
        return "".join(str(k) for k, c in enumerate(vector, start=1) if c)
    if any(c not in (-1, 0, 1) for c in vector):
        raise ClassicalCoordsError(f"{vector} is not a signed subset weight")
    return "".join(("-" if c < 0 else "") + str(k) for k, c in enumerate(vector, start=1) if c)


def parse_chamber_name(datum: RootDatum, name: str) -> Weight:
    """Inverse of chamber_name; type A also accepts the braced form "{1,3}"."""
    kind = _require_kind(datum)
    n = classical_length(datum)
    text = name.strip().replace("−", "-")
    vector = [0] * n

    if kind == ClassicalKind.A:
        digits = text.strip("{}").replace(",", "").replace(" ", "")
        if not digits.isdigit():
            raise ClassicalCoordsError(f"Malformed subset name: {name!r}")
        for ch in digits:
            k = int(ch)
            if not 1 <= k <= n or vector[k - 1]:
                raise ClassicalCoordsError(f"Malformed subset name: {name!r}")
            vector[k - 1] = 1
    else:
        if not text or SIGNED_TOKEN_RE.sub("", text):
            raise ClassicalCoordsError(f"Malformed signed subset name: {name!r}")
        for sign, digit in SIGNED_TOKEN_RE.findall(text):
            k = int(digit)
            if not 1 <= k <= n or vector[k - 1]:
                raise ClassicalCoordsError(f"Malformed signed subset name: {name!r}")
            vector[k - 1] = -1 if sign else 1

    return from_classical(datum, ClassicalCoords(kind, tuple(vector)))
