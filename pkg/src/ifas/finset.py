"""Finite-set plumbing: objects, plain set maps, pullbacks of cospans.

Objects are bare sizes n >= 0 standing for {1..n}; elements are 1-based
indices throughout.
"""

from __future__ import annotations

from typing import NamedTuple


class SetMap(NamedTuple):
    """A plain map of finite sets {1..dom} -> {1..cod}.

    ``image[x-1]`` is the image of element x.
    """

    dom: int
    cod: int
    image: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.image[x - 1]


def set_map(dom: int, cod: int, image) -> SetMap:
    """Validating constructor for :class:`SetMap`."""
    image = tuple(image)
    if dom < 0 or cod < 0:
        raise ValueError("object sizes must be non-negative")
    if len(image) != dom:
        raise ValueError(f"image has length {len(image)}, expected {dom}")
    for x, v in enumerate(image, start=1):
        if not 1 <= v <= cod:
            raise ValueError(f"image of {x} is {v}, outside 1..{cod}")
    return SetMap(dom, cod, image)


def identity_map(n: int) -> SetMap:
    return SetMap(n, n, tuple(range(1, n + 1)))


def compose_set(g: SetMap, f: SetMap) -> SetMap:
    """The composite g after f."""
    if f.cod != g.dom:
        raise ValueError(f"cannot compose: f has codomain {f.cod}, g has domain {g.dom}")
    return SetMap(f.dom, g.cod, tuple(g.image[v - 1] for v in f.image))


def is_injective(f: SetMap) -> bool:
    return len(set(f.image)) == f.dom


def is_surjective(f: SetMap) -> bool:
    return len(set(f.image)) == f.cod


class Pullback(NamedTuple):
    """Pullback of a cospan f: m -> q <- p :phi.

    The apex enumerates all pairs (x, y) with f(x) = phi(y), numbered
    lexicographically by (y, x): the right-leg coordinate y varies slowest.
    ``proj_m`` and ``proj_p`` are the two projections.
    """

    apex: int
    pairs: tuple[tuple[int, int], ...]
    proj_m: SetMap
    proj_p: SetMap

    def index_of(self, x: int, y: int) -> int:
        """1-based apex index of the pair (x, y)."""
        return self.pairs.index((x, y)) + 1


def pullback(f: SetMap, phi: SetMap) -> Pullback:
    """Pullback of the cospan (f: m -> q, phi: p -> q)."""
    if f.cod != phi.cod:
        raise ValueError(f"cospan legs disagree: codomains {f.cod} and {phi.cod}")
    pairs = tuple(
        (x, y)
        for y in range(1, phi.dom + 1)
        for x in range(1, f.dom + 1)
        if f.image[x - 1] == phi.image[y - 1]
    )
    apex = len(pairs)
    proj_m = SetMap(apex, f.dom, tuple(x for x, _ in pairs))
    proj_p = SetMap(apex, phi.dom, tuple(y for _, y in pairs))
    return Pullback(apex, pairs, proj_m, proj_p)
