import logging
from collections.abc import Callable, Iterable
from functools import cached_property

from django.conf import settings

from mvpoly.apps.core.exceptions import CartanMatrixError, NotFiniteTypeError, UnsupportedTypeError

from .types import CartanMatrix, ClassicalKind, Coweight, Weight
from .vectors import dot, sub, unit, zero

logger = logging.getLogger(__name__)

# Order of s_i s_j as a function of a_ij * a_ji.
BRAID_ORDERS = {0: 2, 1: 3, 2: 4, 3: 6}


class RootDatum:
    """
    Root datum of a simply connected semisimple group in integer coordinates.

    Weights are written in the fundamental-weight basis and coweights in the
    simple-coroot basis, so every pairing is a dot product and every
    reflection is integral. Roots and coroots are stored as coefficient
    vectors over the simple roots (resp. simple coroots).

    Usage:
        datum = RootDatum(CartanMatrix.from_rows([[2, -1], [-1, 2]]), name="A2")
        datum.pair(datum.simple_coroot(1), datum.simple_root(2))  # -1
    """

    def __init__(
        self,
        cartan: CartanMatrix,
        name: str | None = None,
        kind: ClassicalKind | None = None,
    ):
        self.cartan = cartan
        self.name = name
        self.kind = kind
        self._validate()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootDatum) and self.cartan == other.cartan

    def __hash__(self) -> int:
        return hash(self.cartan)

    def __repr__(self) -> str:
        return f"RootDatum({self.name or self.cartan.entries})"

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def a(self, i: int, j: int) -> int:
        return self.cartan(i, j)

    def _validate(self) -> None:
        entries = self.cartan.entries
        r = len(entries)
        if r == 0:
            raise CartanMatrixError("Cartan matrix must have positive rank")
        if any(len(row) != r for row in entries):
            raise CartanMatrixError("Cartan matrix must be square")

        for i in self.nodes:
            for j in self.nodes:
                a = self.a(i, j)
                if i == j and a != 2:
                    raise CartanMatrixError(f"Diagonal entry a[{i}][{i}] = {a}, expected 2")
                if i != j and a > 0:
                    raise CartanMatrixError(f"Off-diagonal entry a[{i}][{j}] = {a} is positive")
                if i != j and (a == 0) != (self.a(j, i) == 0):
                    raise CartanMatrixError(f"Entries a[{i}][{j}] and a[{j}][{i}] must vanish together")

        for i in self.nodes:
            for j in self.nodes:
                if i < j:
                    bond = self.bond(i, j)
                    if bond == 3:
                        raise UnsupportedTypeError("Type G2 is not supported")
                    if bond > 3:
                        raise NotFiniteTypeError(f"Nodes {i} and {j} have bond {bond}: not of finite type")

        # Raises when the root closure does not terminate.
        _ = self.roots

    # Lattices

    def simple_root(self, j: int) -> Weight:
        """alpha_j in weight coordinates: column j of the Cartan matrix."""
        return tuple(self.a(i, j) for i in self.nodes)

    def simple_coroot(self, j: int) -> Coweight:
        return unit(self.rank, j)

    def fundamental_weight(self, i: int) -> Weight:
        return unit(self.rank, i)

    def zero(self) -> tuple[int, ...]:
        return zero(self.rank)

    def pair(self, mu: Coweight, lam: Weight) -> int:
        return dot(mu, lam)

    def reflect_weight(self, i: int, lam: Weight) -> Weight:
        """s_i . lam = lam - <alpha_i^vee, lam> alpha_i."""
        c = lam[i - 1]
        if c == 0:
            return lam
        return sub(lam, tuple(c * x for x in self.simple_root(i)))

    def reflect_coweight(self, i: int, mu: Coweight) -> Coweight:
        """s_i . mu = mu - <mu, alpha_i> alpha_i^vee."""
        c = self.pair(mu, self.simple_root(i))
        if c == 0:
            return mu
        return tuple(m - c if k == i else m for k, m in zip(self.nodes, mu))

    def is_dominant(self, mu: Coweight) -> bool:
        return all(self.pair(mu, self.simple_root(j)) >= 0 for j in self.nodes)

    # Bonds

    def bond(self, i: int, j: int) -> int:
        return self.a(i, j) * self.a(j, i)

    def braid_order(self, i: int, j: int) -> int:
        """Order of s_i s_j."""
        if i == j:
            return 1
        return BRAID_ORDERS[self.bond(i, j)]

    @cached_property
    def is_simply_laced(self) -> bool:
        return all(self.bond(i, j) <= 1 for i in self.nodes for j in self.nodes if i != j)

    # Roots and coroots (coefficient vectors over simple roots / coroots)

    def _reflect_root(self, i: int, coeffs: tuple[int, ...]) -> tuple[int, ...]:
        c = sum(self.a(i, j) * x for j, x in zip(self.nodes, coeffs))
        return tuple(x - c if k == i else x for k, x in zip(self.nodes, coeffs))

    def _reflect_coroot(self, i: int, coeffs: tuple[int, ...]) -> tuple[int, ...]:
        c = sum(x * self.a(k, i) for k, x in zip(self.nodes, coeffs))
        return tuple(x - c if k == i else x for k, x in zip(self.nodes, coeffs))

    def _close(
        self,
        reflect: Callable[[int, tuple[int, ...]], tuple[int, ...]],
    ) -> list[tuple[int, ...]]:
        cap = getattr(settings, "MV_ROOT_CAP", 10000)
        seeds = [unit(self.rank, j) for j in self.nodes]
        seen = set(seeds)
        frontier = list(seeds)
        while frontier:
            next_frontier = []
            for v in frontier:
                for i in self.nodes:
                    u = reflect(i, v)
                    if u in seen:
                        continue
                    if len(seen) >= cap:
                        logger.error(f"Root closure exceeded {cap} roots for {self.cartan.entries}")
                        raise NotFiniteTypeError(
                            f"Root closure exceeded {cap} roots: Cartan matrix is not of finite type"
                        )
                    seen.add(u)
                    next_frontier.append(u)
            frontier = next_frontier
        return sorted(seen, key=lambda v: (sum(v), v))

    @cached_property
    def roots(self) -> list[tuple[int, ...]]:
        return self._close(self._reflect_root)

    @cached_property
    def positive_roots(self) -> list[tuple[int, ...]]:
        return [beta for beta in self.roots if all(x >= 0 for x in beta)]

    @cached_property
    def coroots(self) -> list[Coweight]:
        return self._close(self._reflect_coroot)

    @cached_property
    def positive_coroots(self) -> list[Coweight]:
        return [beta for beta in self.coroots if all(x >= 0 for x in beta)]

    @cached_property
    def positive_coroot_sum(self) -> Coweight:
        """2 rho^vee, the sum of the positive coroots."""
        return tuple(sum(col) for col in zip(*self.positive_coroots))

    def root_weight(self, coeffs: Iterable[int]) -> Weight:
        """The root sum_j c_j alpha_j in weight coordinates."""
        total = self.zero()
        for j, c in zip(self.nodes, coeffs):
            if c:
                total = tuple(t + c * x for t, x in zip(total, self.simple_root(j)))
        return total
