import logging
from functools import cached_property, lru_cache

import networkx as nx
from django.conf import settings

from mvpoly.apps.core.exceptions import CapExceededError, InvalidDatumError
from mvpoly.apps.rootdatum.datum import RootDatum
from mvpoly.apps.rootdatum.types import Weight
from mvpoly.apps.rootdatum.vectors import neg, sub, unit

from .types import BraidMove, ChamberWeight, ReducedWord, Side, WeylElement, WordPath

logger = logging.getLogger(__name__)


class WeylGroup:
    """
    The Weyl group of a root datum, enumerated once by breadth-first search.

    Elements are discovered by right multiplication in order of increasing
    length, trying letters in increasing order, so the word stored on each
    element is its lexicographically least reduced word.
    """

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self._paths: dict[ReducedWord, WordPath] = {}
        self._splits: dict[int, tuple[frozenset[ChamberWeight], frozenset[ChamberWeight]]] = {}
        self._sign_checks: dict[int, bool] = {}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylGroup) and self.datum == other.datum

    def __hash__(self) -> int:
        return hash(self.datum)

    def __repr__(self) -> str:
        return f"WeylGroup({self.datum.name or self.datum.cartan.entries})"

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def nodes(self) -> range:
        return self.datum.nodes

    # Elements

    @cached_property
    def identity(self) -> WeylElement:
        r = self.rank
        return WeylElement(
            weight_images=tuple(unit(r, i) for i in self.nodes),
            coweight_images=tuple(unit(r, k) for k in self.nodes),
            word=(),
        )

    def _times_simple(self, w: WeylElement, i: int) -> WeylElement:
        """w s_i, computed from the images of w."""
        w_alpha = w.act_weight(self.datum.simple_root(i))
        weight_images = tuple(
            sub(image, w_alpha) if k == i else image
            for k, image in zip(self.nodes, w.weight_images)
        )
        base = w.coweight_images[i - 1]
        coweight_images = tuple(
            tuple(x - self.datum.a(k, i) * b for x, b in zip(image, base))
            for k, image in zip(self.nodes, w.coweight_images)
        )
        return WeylElement(weight_images, coweight_images, w.word + (i,))

    @cached_property
    def elements(self) -> tuple[WeylElement, ...]:
        cap = getattr(settings, "MV_WEYL_SIZE_CAP", 100000)
        seen = {self.identity.weight_images}
        order = [self.identity]
        frontier = [self.identity]
        while frontier:
            next_frontier = []
            for w in frontier:
                for i in self.nodes:
                    u = self._times_simple(w, i)
                    if u.weight_images in seen:
                        continue
                    if len(order) >= cap:
                        logger.error(f"Weyl group of {self.datum!r} exceeded {cap} elements")
                        raise CapExceededError(f"Weyl group enumeration exceeded {cap} elements")
                    seen.add(u.weight_images)
                    order.append(u)
                    next_frontier.append(u)
            frontier = next_frontier
        logger.debug(f"Enumerated {len(order)} elements of W({self.datum.name})")
        return tuple(order)

    @cached_property
    def _lookup(self) -> dict[tuple[Weight, ...], WeylElement]:
        return {w.weight_images: w for w in self.elements}

    def canonical(self, weight_images: tuple[Weight, ...]) -> WeylElement:
        return self._lookup[weight_images]

    @cached_property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    @property
    def order(self) -> int:
        return len(self.elements)

    def times_simple_right(self, w: WeylElement, i: int) -> WeylElement:
        """w s_i."""
        return self._lookup[self._times_simple(w, i).weight_images]

    def times_simple_left(self, i: int, w: WeylElement) -> WeylElement:
        """s_i w."""
        images = tuple(self.datum.reflect_weight(i, image) for image in w.weight_images)
        return self._lookup[images]

    def element_of_word(self, word: ReducedWord) -> WeylElement:
        w = self.identity
        for i in word:
            w = self.times_simple_right(w, i)
        return w

    def is_reduced(self, word: ReducedWord) -> bool:
        return self.element_of_word(word).length == len(word)

    def descent(self, w: WeylElement, i: int, side: Side = Side.LEFT) -> bool:
        if side == Side.RIGHT:
            other = self.times_simple_right(w, i)
        else:
            other = self.times_simple_left(i, w)
        return other.length < self._lookup[w.weight_images].length

    # Chamber weights

    def chamber(self, w: WeylElement, i: int) -> ChamberWeight:
        """The chamber weight w . Lambda_i."""
        return ChamberWeight(i, w.weight_images[i - 1])

    @cached_property
    def chamber_weights(self) -> tuple[ChamberWeight, ...]:
        found = {self.chamber(w, i) for w in self.elements for i in self.nodes}
        return tuple(sorted(found))

    @cached_property
    def chamber_index(self) -> dict[ChamberWeight, int]:
        return {gamma: k for k, gamma in enumerate(self.chamber_weights)}

    @cached_property
    def chamber_by_weight(self) -> dict[Weight, ChamberWeight]:
        table: dict[Weight, ChamberWeight] = {}
        for gamma in self.chamber_weights:
            if gamma.weight in table:
                raise InvalidDatumError(f"Weight {gamma.weight} lies in two fundamental orbits")
            table[gamma.weight] = gamma
        return table

    def fundamental_chamber(self, i: int) -> ChamberWeight:
        return self.chamber(self.identity, i)

    def negative(self, gamma: ChamberWeight) -> ChamberWeight:
        """-gamma, again a chamber weight (of level eta(i))."""
        return self.chamber_by_weight[neg(gamma.weight)]

    def gamma_split(self, j: int) -> tuple[frozenset[ChamberWeight], frozenset[ChamberWeight]]:
        """
        (Gamma^j, Gamma_j): the chamber weights w . Lambda_i with s_j w < w,
        and the rest.
        """
        if j not in self._splits:
            upper = frozenset(
                self.chamber(w, i)
                for w in self.elements
                if self.descent(w, j, Side.LEFT)
                for i in self.nodes
            )
            lower = frozenset(self.chamber_weights) - upper
            self._splits[j] = (upper, lower)
        return self._splits[j]

    def sign_test_agrees(self, j: int) -> bool:
        """Whether Gamma_j is exactly {gamma : <alpha_j^vee, gamma> > 0}."""
        if j not in self._sign_checks:
            _, lower = self.gamma_split(j)
            by_sign = frozenset(g for g in self.chamber_weights if g.weight[j - 1] > 0)
            agrees = by_sign == lower
            if not agrees:
                logger.warning(
                    f"Pairing-sign test for Gamma_{j} disagrees with the descent definition "
                    f"in {self.datum!r}; using the definition"
                )
            self._sign_checks[j] = agrees
        return self._sign_checks[j]

    def is_relative(self, gamma: ChamberWeight, j: int) -> bool:
        """Whether gamma lies in Gamma^j."""
        if self.sign_test_agrees(j):
            return gamma.weight[j - 1] <= 0
        return gamma in self.gamma_split(j)[0]

    @cached_property
    def dynkin_involution(self) -> tuple[int, ...]:
        """eta with -w_0 . alpha_i = alpha_{eta(i)}, as a tuple indexed from node 1."""
        roots = {self.datum.simple_root(j): j for j in self.nodes}
        return tuple(
            roots[neg(self.longest.act_weight(self.datum.simple_root(i)))]
            for i in self.nodes
        )

    def eta(self, i: int) -> int:
        return self.dynkin_involution[i - 1]

    # Reduced words of w_0

    @cached_property
    def canonical_word(self) -> ReducedWord:
        """The lexicographically least reduced word of w_0."""
        return self.longest.word

    def word_starting_with(self, j: int) -> ReducedWord:
        """The lexicographically least reduced word of w_0 with first letter j."""
        return (j,) + self.times_simple_left(j, self.longest).word

    @cached_property
    def reduced_words_w0(self) -> tuple[ReducedWord, ...]:
        cap = getattr(settings, "MV_REDUCED_WORD_RANK_CAP", 5)
        if self.rank > cap:
            logger.error(f"Refusing to enumerate reduced words in rank {self.rank} (cap {cap})")
            raise CapExceededError(f"Reduced words of w0 are only enumerated up to rank {cap}")

        words: dict[tuple[Weight, ...], list[ReducedWord]] = {
            self.identity.weight_images: [()],
        }
        for w in self.elements[1:]:
            found = []
            for i in self.nodes:
                if self.descent(w, i, Side.RIGHT):
                    u = self.times_simple_right(w, i)
                    found.extend(prefix + (i,) for prefix in words[u.weight_images])
            words[w.weight_images] = found
        return tuple(sorted(words[self.longest.weight_images]))

    def braid_neighbors(self, word: ReducedWord) -> list[tuple[ReducedWord, BraidMove]]:
        """Words obtained by one braid move, with the move that produced them."""
        neighbors = []
        m = len(word)
        for k in range(m - 1):
            i, j = word[k], word[k + 1]
            if i == j:
                continue
            d = self.datum.braid_order(i, j)
            if k + d > m:
                continue
            block = word[k : k + d]
            if any(block[t] != (i if t % 2 == 0 else j) for t in range(d)):
                continue
            flipped = tuple(j if t % 2 == 0 else i for t in range(d))
            neighbors.append((word[:k] + flipped + word[k + d :], BraidMove(k, (i, j), d)))
        return neighbors

    def braid_graph(self) -> nx.Graph:
        """Reduced words of w_0 joined by single braid moves."""
        graph = nx.Graph()
        for word in self.reduced_words_w0:
            graph.add_node(word)
            for other, move in self.braid_neighbors(word):
                graph.add_edge(word, other, length=move.length)
        return graph

    # Paths

    def path(self, word: ReducedWord) -> WordPath:
        """Prefixes and path chamber weights of a reduced word."""
        cached = self._paths.get(word)
        if cached is not None:
            return cached

        prefixes = [self.identity]
        incoming, outgoing = [], []
        for i in word:
            w = prefixes[-1]
            u = self.times_simple_right(w, i)
            if u.length != w.length + 1:
                raise InvalidDatumError(f"Word {word} is not reduced")
            incoming.append(self.chamber(w, i))
            outgoing.append(self.chamber(u, i))
            prefixes.append(u)

        path = WordPath(tuple(word), tuple(prefixes), tuple(incoming), tuple(outgoing))
        self._paths[tuple(word)] = path
        return path

    def longest_path(self, word: ReducedWord) -> WordPath:
        """As path, requiring the word to be a reduced word of w_0."""
        path = self.path(tuple(word))
        if path.prefixes[-1] != self.longest:
            raise InvalidDatumError(f"Word {word} is not a reduced word of w0")
        return path


@lru_cache(maxsize=None)
def weyl_group(datum: RootDatum) -> WeylGroup:
    """The shared WeylGroup instance of a root datum."""
    return WeylGroup(datum)
