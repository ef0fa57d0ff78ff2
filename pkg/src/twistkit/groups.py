"""Finite permutation groups: enumeration, conjugacy classes, power maps, subgroups.

Groups enter as lists of permutation generators and are enumerated by plain
breadth-first closure; conjugacy classes and power maps are computed by brute
force.  This is deliberate: the groups handled here are tiny (default bound
20 000 elements) and the payoff is one uniform, hashable element type.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "GroupData",
    "SubgroupData",
    "ConjugacyClass",
    "GroupError",
    "EnumerationBoundError",
    "enumerate_group",
    "squaring_class_map",
    "elementary_2_quotient_subgroups",
    "subgroup_classes",
    "make_subgroup",
]

DEFAULT_MAX_ORDER = 20_000


class GroupError(Exception):
    """Structural errors: non-bijective generators, non-closed subgroups."""


class EnumerationBoundError(GroupError):
    """Closure grew past the configured element bound."""


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..d} stored as the tuple of 1-based images."""

    images: tuple[int, ...]

    @staticmethod
    def from_images(images: Sequence[int]) -> "Permutation":
        d = len(images)
        if sorted(images) != list(range(1, d + 1)):
            raise GroupError(f"not a bijection of 1..{d}: {list(images)}")
        return Permutation(tuple(images))

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(1, degree + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (p * q)(x) = p(q(x))
        return Permutation(tuple(self.images[q - 1] for q in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for pre, post in enumerate(self.images, start=1):
            inv[post - 1] = pre
        return Permutation(tuple(inv))

    def order(self) -> int:
        n = 1
        acc = self
        ident = Permutation.identity(self.degree)
        while acc != ident:
            acc = acc * self
            n += 1
        return n


@dataclass(frozen=True)
class ConjugacyClass:
    rep: int  # element index of the representative (minimal member)
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


class GroupData:
    """A fully enumerated finite permutation group.

    Elements are sorted lexicographically by image tuple, so index 0 is the
    identity.  Classes are sorted by minimal member index, so class 0 is the
    identity class.  Immutable after construction.
    """

    def __init__(
        self,
        degree: int,
        generators: tuple[Permutation, ...],
        elements: tuple[Permutation, ...],
    ):
        self.degree = degree
        self.generators = generators
        self.elements = elements
        self.index = {p: i for i, p in enumerate(elements)}
        self._build_classes()
        self._build_power_maps()

    # -- construction internals -------------------------------------------------

    def _build_classes(self) -> None:
        n = len(self.elements)
        class_of = [-1] * n
        classes: list[ConjugacyClass] = []
        conjugators = self.generators if self.generators else (Permutation.identity(self.degree),)
        for start in range(n):
            if class_of[start] != -1:
                continue
            orbit = {start}
            frontier = [start]
            while frontier:
                e = frontier.pop()
                pe = self.elements[e]
                for g in conjugators:
                    c = self.index[g * pe * g.inverse()]
                    if c not in orbit:
                        orbit.add(c)
                        frontier.append(c)
            members = tuple(sorted(orbit))
            ci = len(classes)
            classes.append(ConjugacyClass(members[0], members))
            for m in members:
                class_of[m] = ci
        self.classes = tuple(classes)
        self.class_of = tuple(class_of)

    def _build_power_maps(self) -> None:
        orders = [self.elements[c.rep].order() for c in self.classes]
        exponent = 1
        for o in orders:
            exponent = exponent // gcd(exponent, o) * o
        self.exponent = exponent
        self.element_orders = tuple(orders)
        maps: dict[int, tuple[int, ...]] = {}
        acc = [0] * len(self.classes)  # class of rep^0 = identity
        powers = [Permutation.identity(self.degree)] * len(self.classes)
        maps[0] = tuple(acc)
        for k in range(1, exponent + 1):
            powers = [p * self.elements[c.rep] for p, c in zip(powers, self.classes)]
            maps[k] = tuple(self.class_of[self.index[p]] for p in powers)
        self.power_maps = maps

    # -- queries ------------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def identity_index(self) -> int:
        return 0

    def multiply(self, i: int, j: int) -> int:
        return self.index[self.elements[i] * self.elements[j]]

    def inverse_index(self, i: int) -> int:
        return self.index[self.elements[i].inverse()]

    def inverse_class(self, ci: int) -> int:
        return self.class_of[self.inverse_index(self.classes[ci].rep)]

    def power_class_map(self, k: int) -> tuple[int, ...]:
        """Class -> class map sending the class of s to the class of s^k."""
        k %= self.exponent
        return self.power_maps[k]

    def class_of_element(self, p: Permutation) -> int:
        return self.class_of[self.index[p]]


def enumerate_group(
    generators: Iterable[Permutation] | Iterable[Sequence[int]],
    max_order: int = DEFAULT_MAX_ORDER,
    degree: int | None = None,
) -> GroupData:
    """Breadth-first closure of the generators into a full GroupData.

    Accepts Permutation objects or raw 1-based image sequences.  With an empty
    generator list, ``degree`` selects the trivial group's degree (default 1).
    """
    gens: list[Permutation] = []
    for g in generators:
        if not isinstance(g, Permutation):
            g = Permutation.from_images(list(g))
        gens.append(g)
    if gens:
        degrees = {g.degree for g in gens}
        if len(degrees) != 1:
            raise GroupError(f"generators act on mixed degrees {sorted(degrees)}")
        deg = degrees.pop()
    else:
        deg = degree if degree is not None else 1
    ident = Permutation.identity(deg)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in seen:
                    if len(seen) >= max_order:
                        raise EnumerationBoundError(
                            f"group closure exceeds the bound of {max_order} elements"
                        )
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    elements = tuple(sorted(seen))
    return GroupData(deg, tuple(gens), elements)


def squaring_class_map(group: GroupData) -> tuple[int, ...]:
    """The class -> class map induced by s -> s*s."""
    return group.power_class_map(2)


class SubgroupData:
    """A subgroup given by its member element indices, with class fusion data.

    ``classes`` are the subgroup's own conjugacy classes (orbits under
    conjugation by subgroup elements), each carrying group-level element
    indices; ``fusion`` maps each subgroup class to the containing class of
    the ambient group.
    """

    def __init__(self, group: GroupData, members: tuple[int, ...], normal: bool,
                 classes: tuple[ConjugacyClass, ...], fusion: tuple[int, ...]):
        self.group = group
        self.members = members
        self.is_normal = normal
        self.classes = classes
        self.fusion = fusion

    @property
    def order(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"SubgroupData(order={self.order}, normal={self.is_normal})"


def make_subgroup(group: GroupData, members: Iterable[int]) -> SubgroupData:
    """Validate closure and build class/fusion data for a subgroup."""
    mset = frozenset(members)
    if group.identity_index() not in mset:
        raise GroupError("subgroup must contain the identity")
    for i in mset:
        if group.inverse_index(i) not in mset:
            raise GroupError("subgroup not closed under inversion")
        for j in mset:
            if group.multiply(i, j) not in mset:
                raise GroupError("subgroup not closed under multiplication")
    normal = all(
        group.index[g * group.elements[h] * g.inverse()] in mset
        for g in group.generators
        for h in mset
    )
    # subgroup conjugacy classes by orbit under conjugation by all members
    remaining = set(mset)
    classes: list[ConjugacyClass] = []
    while remaining:
        start = min(remaining)
        orbit = {start}
        frontier = [start]
        while frontier:
            e = frontier.pop()
            pe = group.elements[e]
            for m in mset:
                pm = group.elements[m]
                c = group.index[pm * pe * pm.inverse()]
                if c not in orbit:
                    orbit.add(c)
                    frontier.append(c)
        mem = tuple(sorted(orbit))
        classes.append(ConjugacyClass(mem[0], mem))
        remaining -= orbit
    classes.sort(key=lambda c: c.rep)
    fusion = tuple(group.class_of[c.rep] for c in classes)
    return SubgroupData(group, tuple(sorted(mset)), normal, tuple(classes), fusion)


def subgroup_classes(group: GroupData, subgroup: SubgroupData) -> tuple[tuple[ConjugacyClass, ...], tuple[int, ...]]:
    """Class data of the subgroup together with its fusion into group classes."""
    if subgroup.group is not group:
        raise GroupError("subgroup belongs to a different group")
    return subgroup.classes, subgroup.fusion


def _closure(group: GroupData, seeds: Iterable[int]) -> frozenset[int]:
    seen = {group.identity_index()}
    seen.update(seeds)
    frontier = list(seen)
    gens = [g for g in seen]
    while frontier:
        e = frontier.pop()
        for g in gens:
            for prod in (group.multiply(e, g), group.multiply(g, e)):
                if prod not in seen:
                    seen.add(prod)
                    frontier.append(prod)
                    gens.append(prod)
    return frozenset(seen)


def agemo_commutator_subgroup(group: GroupData) -> frozenset[int]:
    """The subgroup generated by all squares and all commutators."""
    seeds = set()
    n = group.order
    for i in range(n):
        seeds.add(group.multiply(i, i))
    for i in range(n):
        inv_i = group.inverse_index(i)
        for j in range(n):
            inv_j = group.inverse_index(j)
            seeds.add(group.multiply(group.multiply(inv_i, inv_j), group.multiply(i, j)))
    return _closure(group, seeds)


def elementary_2_quotient_subgroups(group: GroupData) -> list[SubgroupData]:
    """All subgroups H with G/H abelian of exponent dividing 2.

    These are exactly the preimages of the subspaces of the F2-vector space
    G/N, where N is generated by all squares and commutators.  Includes G
    itself; sorted by (order, members) for determinism.
    """
    n_members = agemo_commutator_subgroup(group)
    # coset space of N, represented by frozensets of element indices
    coset_of: dict[int, int] = {}
    cosets: list[frozenset[int]] = []
    for e in range(group.order):
        if e in coset_of:
            continue
        cs = frozenset(group.multiply(e, m) for m in n_members)
        ci = len(cosets)
        cosets.append(cs)
        for m in cs:
            coset_of[m] = ci
    identity_coset = coset_of[group.identity_index()]

    def coset_mul(a: int, b: int) -> int:
        return coset_of[group.multiply(min(cosets[a]), min(cosets[b]))]

    # enumerate all subgroups (= subspaces) of the elementary abelian quotient
    subspaces: set[frozenset[int]] = {frozenset({identity_coset})}
    frontier = [frozenset({identity_coset})]
    all_cosets = range(len(cosets))
    while frontier:
        space = frontier.pop()
        for v in all_cosets:
            if v in space:
                continue
            new = set(space)
            new.add(v)
            for w in space:
                new.add(coset_mul(v, w))
            fz = frozenset(new)
            if fz not in subspaces:
                subspaces.add(fz)
                frontier.append(fz)
    result = []
    for space in subspaces:
        members = sorted(m for ci in space for m in cosets[ci])
        result.append(make_subgroup(group, members))
    result.sort(key=lambda h: (h.order, h.members))
    return result
