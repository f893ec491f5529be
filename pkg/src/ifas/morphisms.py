"""The morphism algebra of involutive non-commutative sets.

Two flavors of morphism live here:

* :class:`IFasMor` -- a set map {1..n} -> {1..m} with a totally ordered
  fiber over each codomain element, every domain element carrying a label
  from C2.  Composition twists fibers: see :func:`act_c2` and
  :func:`compose`.
* :class:`IFMor` -- the commutative cousin: a label per domain element but
  no fiber order.

Labels are the integers +1 (identity) and -1 (the twist t); label
multiplication is integer multiplication, so t*t = 1 for free.
"""

from __future__ import annotations

import itertools
from math import comb, factorial
from typing import Iterator, NamedTuple

from .finset import SetMap

LABELS = (1, -1)

# A fiber is an ordered tuple of (domain element, label) pairs.
Fiber = tuple[tuple[int, int], ...]


class IFasMor(NamedTuple):
    """Morphism with ordered, labelled fibers.

    ``fibers[i-1]`` is the ordered fiber over codomain element i; its
    entries are (domain element, label) pairs.  The fibers partition
    {1..dom}.
    """

    dom: int
    cod: int
    fibers: tuple[Fiber, ...]

    @property
    def kind(self) -> str:
        return "ifas"

    def target_of(self, x: int) -> int:
        """Codomain element whose fiber contains x."""
        for i, fiber in enumerate(self.fibers, start=1):
            for e, _ in fiber:
                if e == x:
                    return i
        raise ValueError(f"element {x} not found in any fiber")

    def label_of(self, x: int) -> int:
        for fiber in self.fibers:
            for e, lab in fiber:
                if e == x:
                    return lab
        raise ValueError(f"element {x} not found in any fiber")

    def underlying(self) -> SetMap:
        """Forget fiber order and labels, keeping the set map."""
        image = [0] * self.dom
        for i, fiber in enumerate(self.fibers, start=1):
            for e, _ in fiber:
                image[e - 1] = i
        return SetMap(self.dom, self.cod, tuple(image))

    def encoding(self):
        """Canonical sort key: fibers in codomain order, label 1 before t."""
        return tuple(
            tuple((e, 0 if lab == 1 else 1) for e, lab in fiber) for fiber in self.fibers
        )


class IFMor(NamedTuple):
    """Morphism with labels but no fiber order.

    ``assignments[x-1]`` is the (target, label) pair of domain element x.
    """

    dom: int
    cod: int
    assignments: tuple[tuple[int, int], ...]

    @property
    def kind(self) -> str:
        return "if"

    def target_of(self, x: int) -> int:
        return self.assignments[x - 1][0]

    def label_of(self, x: int) -> int:
        return self.assignments[x - 1][1]

    def underlying(self) -> SetMap:
        return SetMap(self.dom, self.cod, tuple(t for t, _ in self.assignments))

    def fiber_elements(self, i: int) -> tuple[int, ...]:
        """Elements mapping to i, in increasing order (no intrinsic order)."""
        return tuple(x for x in range(1, self.dom + 1) if self.assignments[x - 1][0] == i)

    def encoding(self):
        return tuple((t, 0 if lab == 1 else 1) for t, lab in self.assignments)


Morphism = IFasMor | IFMor


def ifas_mor(dom: int, cod: int, fibers) -> IFasMor:
    """Validating constructor: fibers must partition {1..dom}."""
    fibers = tuple(tuple((int(e), int(lab)) for e, lab in fiber) for fiber in fibers)
    if dom < 0 or cod < 0:
        raise ValueError("object sizes must be non-negative")
    if len(fibers) != cod:
        raise ValueError(f"{len(fibers)} fibers given, expected {cod}")
    seen: set[int] = set()
    for i, fiber in enumerate(fibers, start=1):
        for e, lab in fiber:
            if lab not in LABELS:
                raise ValueError(f"label of {e} in fiber {i} is {lab}, expected 1 or -1")
            if not 1 <= e <= dom:
                raise ValueError(f"element {e} in fiber {i} outside 1..{dom}")
            if e in seen:
                raise ValueError(f"element {e} appears in more than one fiber position")
            seen.add(e)
    if len(seen) != dom:
        missing = sorted(set(range(1, dom + 1)) - seen)
        raise ValueError(f"fibers do not cover the domain; missing {missing}")
    return IFasMor(dom, cod, fibers)


def if_mor(dom: int, cod: int, assignments) -> IFMor:
    """Validating constructor for :class:`IFMor`."""
    assignments = tuple((int(t), int(lab)) for t, lab in assignments)
    if dom < 0 or cod < 0:
        raise ValueError("object sizes must be non-negative")
    if len(assignments) != dom:
        raise ValueError(f"{len(assignments)} assignments given, expected {dom}")
    for x, (t, lab) in enumerate(assignments, start=1):
        if not 1 <= t <= cod:
            raise ValueError(f"target of {x} is {t}, outside 1..{cod}")
        if lab not in LABELS:
            raise ValueError(f"label of {x} is {lab}, expected 1 or -1")
    return IFMor(dom, cod, assignments)


def act_c2(fiber: Fiber, a: int) -> Fiber:
    """The C2 action on an ordered labelled fiber.

    Acting by -1 inverts the ordering and multiplies every label by -1;
    acting by 1 is the identity.
    """
    if a == 1:
        return fiber
    return tuple((e, -lab) for e, lab in reversed(fiber))


def compose(f2: IFasMor, f1: IFasMor) -> IFasMor:
    """The composite f2 after f1.

    The fiber of the composite over i is the ordered concatenation, along
    f2's fiber over i, of f1's fibers twisted by the labels of f2.
    """
    if f1.cod != f2.dom:
        raise ValueError(f"cannot compose: codomain {f1.cod} != domain {f2.dom}")
    f1_fibers = f1.fibers
    return IFasMor(
        f1.dom,
        f2.cod,
        tuple(
            tuple(
                pair
                for j, alpha in fiber2
                for pair in act_c2(f1_fibers[j - 1], alpha)
            )
            for fiber2 in f2.fibers
        ),
    )


def identity(n: int) -> IFasMor:
    return IFasMor(n, n, tuple(((i, 1),) for i in range(1, n + 1)))


def tensor(f: IFasMor, g: IFasMor) -> IFasMor:
    """Disjoint union, with g's elements shifted past f's."""
    shifted = tuple(tuple((e + f.dom, lab) for e, lab in fiber) for fiber in g.fibers)
    return IFasMor(f.dom + g.dom, f.cod + g.cod, f.fibers + shifted)


def symmetry(n: int, m: int) -> IFasMor:
    """The block swap n+m -> m+n, all labels 1."""
    fibers = tuple(((n + i, 1),) for i in range(1, m + 1)) + tuple(
        ((x, 1),) for x in range(1, n + 1)
    )
    return IFasMor(n + m, m + n, fibers)


def fundamental() -> tuple[IFasMor, IFasMor, IFasMor]:
    """The fundamental morphisms (m, u, i).

    m: 2 -> 1 with fiber {1^1 < 2^1} encodes multiplication, u: 0 -> 1
    encodes the unit, and i: 1 -> 1 with fiber {1^t} encodes the involution.
    """
    mul = IFasMor(2, 1, (((1, 1), (2, 1)),))
    unit = IFasMor(0, 1, ((),))
    inv = IFasMor(1, 1, (((1, -1),),))
    return mul, unit, inv


def identity_if(n: int) -> IFMor:
    return IFMor(n, n, tuple((i, 1) for i in range(1, n + 1)))


def compose_if(g: IFMor, f: IFMor) -> IFMor:
    """Composite in the unordered flavor: targets compose, labels multiply."""
    if f.cod != g.dom:
        raise ValueError(f"cannot compose: codomain {f.cod} != domain {g.dom}")
    return IFMor(
        f.dom,
        g.cod,
        tuple(
            (g.assignments[t - 1][0], lab * g.assignments[t - 1][1])
            for t, lab in f.assignments
        ),
    )


def tensor_if(f: IFMor, g: IFMor) -> IFMor:
    shifted = tuple((t + f.cod, lab) for t, lab in g.assignments)
    return IFMor(f.dom + g.dom, f.cod + g.cod, f.assignments + shifted)


def symmetry_if(n: int, m: int) -> IFMor:
    return to_if(symmetry(n, m))


def to_if(f: IFasMor) -> IFMor:
    """Forget fiber order, keep targets and labels."""
    assignments = [(0, 0)] * f.dom
    for i, fiber in enumerate(f.fibers, start=1):
        for e, lab in fiber:
            assignments[e - 1] = (i, lab)
    return IFMor(f.dom, f.cod, tuple(assignments))


def is_fas(f: IFasMor) -> bool:
    """Every label trivial (the non-involutive subcategory)."""
    return all(lab == 1 for fiber in f.fibers for _, lab in fiber)


def is_order_preserving(f: IFasMor) -> bool:
    """Order-preserving underlying map, canonical fiber order, trivial labels."""
    expected = 1
    for fiber in f.fibers:
        for e, lab in fiber:
            if lab != 1 or e != expected:
                return False
            expected += 1
    return expected == f.dom + 1


def is_bijection(f: IFasMor) -> bool:
    """Bijective underlying map (singleton fibers), labels arbitrary."""
    return f.dom == f.cod and all(len(fiber) == 1 for fiber in f.fibers)


def is_plain_bijection(f: IFasMor) -> bool:
    return is_bijection(f) and is_fas(f)


def hom_count(n: int, m: int, flavor: str) -> int:
    """Size of the hom-set, by formula."""
    if flavor == "ifas":
        if m == 0:
            return 1 if n == 0 else 0
        return 2**n * factorial(n) * comb(n + m - 1, n)
    if flavor == "if":
        return (2 * m) ** n if n > 0 else 1
    raise ValueError(f"unknown flavor {flavor!r}")


def _ordered_partitions(elements: tuple[int, ...], m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All ways to distribute ``elements`` into m ordered sequences."""
    if not elements:
        yield ((),) * m
        return
    first, rest = elements[0], elements[1:]
    for partial in _ordered_partitions(rest, m):
        for i in range(m):
            fiber = partial[i]
            for pos in range(len(fiber) + 1):
                yield partial[:i] + (fiber[:pos] + (first,) + fiber[pos:],) + partial[i + 1:]


ENUM_GUARD = 10**7


def enumerate_hom(n: int, m: int, flavor: str = "ifas") -> list[Morphism]:
    """All morphisms n -> m of the given flavor, in canonical order.

    Canonical order is lexicographic on :meth:`encoding`.  Guarded so the
    result fits in memory.
    """
    count = hom_count(n, m, flavor)
    if count > ENUM_GUARD:
        raise ValueError(f"hom-set size {count} exceeds enumeration guard {ENUM_GUARD}")
    result: list[Morphism]
    if flavor == "ifas":
        if m == 0:
            return [identity(0)] if n == 0 else []
        elements = tuple(range(1, n + 1))
        result = []
        for shape in _ordered_partitions(elements, m):
            for labels in itertools.product(LABELS, repeat=n):
                result.append(
                    IFasMor(
                        n,
                        m,
                        tuple(
                            tuple((e, labels[e - 1]) for e in fiber) for fiber in shape
                        ),
                    )
                )
    elif flavor == "if":
        if m == 0:
            return [IFMor(0, 0, ())] if n == 0 else []
        choices = [(t, lab) for t in range(1, m + 1) for lab in LABELS]
        result = [IFMor(n, m, assign) for assign in itertools.product(choices, repeat=n)]
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    result.sort(key=lambda f: f.encoding())
    assert len(result) == count
    return result
