"""Integer vector arithmetic on coordinate tuples."""


def add(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def scale(k: int, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(k * a for a in v)


def neg(v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-a for a in v)


def dot(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    return sum(a * b for a, b in zip(u, v, strict=True))


def zero(rank: int) -> tuple[int, ...]:
    return (0,) * rank


def unit(rank: int, i: int) -> tuple[int, ...]:
    """Standard basis vector for node i (numbered from 1)."""
    return tuple(1 if k == i else 0 for k in range(1, rank + 1))
