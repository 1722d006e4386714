"""Numerical semigroups and their elementary invariants.

A numerical semigroup is a subset of the nonnegative integers containing 0,
closed under addition, with finite complement.  The complement elements are
the gaps, the largest gap is the Frobenius number f, the conductor is f + 1,
and the least nonzero member is the multiplicity.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Iterator, List, Tuple

from .errors import (
    EmptyGenerators,
    GcdNotOne,
    InternalError,
    NotAMember,
    RegularRing,
)


def _close(gens: List[int]) -> Tuple[bytearray, int]:
    """Dynamic closure of the generators.

    Returns a membership table and the conductor.  The table is grown until
    it contains a run of ``min(gens)`` consecutive members; adding the least
    generator repeatedly then covers every larger integer.
    """
    least = gens[0]
    if least == 1:
        return bytearray([1]), 0
    bound = 2 * gens[-1] + 2
    while True:
        member = bytearray(bound)
        member[0] = 1
        run = 0
        for z in range(1, bound):
            for a in gens:
                if a > z:
                    break
                if member[z - a]:
                    member[z] = 1
                    break
            if member[z]:
                run += 1
                if run == least:
                    return member, z - least + 1
            else:
                run = 0
        bound *= 2


class NumericalSemigroup:
    """An additively closed cofinite subset of the nonnegative integers.

    Instances are immutable and hashable.  Membership on [0, conductor +
    multiplicity) is held in a bit mask; every integer from the conductor
    upward is a member.  The stored generating set is always the minimal
    one, recomputed from the membership table.
    """

    __slots__ = (
        "generators",
        "multiplicity",
        "frobenius",
        "conductor",
        "genus",
        "gaps",
        "pf",
        "_mask",
        "_bound",
        "_red",
    )

    def __init__(self, generators: Iterable[int]):
        gens = sorted({int(g) for g in generators})
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        if gens[0] <= 0:
            raise ValueError("generators must be positive, got %d" % gens[0])
        g = 0
        for a in gens:
            g = gcd(g, a)
        if g != 1:
            raise GcdNotOne("gcd of generators is %d, not 1" % g)

        table, conductor = _close(gens)
        least = gens[0]
        self.multiplicity = least
        self.conductor = conductor
        self.frobenius = conductor - 1
        self._bound = conductor + least
        mask = 0
        for z in range(min(len(table), self._bound)):
            if table[z]:
                mask |= 1 << z
        mask |= ((1 << self._bound) - 1) ^ ((1 << min(conductor, self._bound)) - 1)
        self._mask = mask

        self.gaps = tuple(z for z in range(1, conductor) if not (mask >> z) & 1)
        self.genus = len(self.gaps)
        self.generators = tuple(self._minimal_generators())
        if self.frobenius < 0:
            self.pf: Tuple[int, ...] = (-1,)
        else:
            self.pf = tuple(
                z for z in self.gaps
                if all(self.contains(z + a) for a in self.generators)
            )
        self._red = None

    def _minimal_generators(self) -> Iterator[int]:
        # A member is a minimal generator iff it is not a sum of two
        # nonzero members; candidates stop at frobenius + multiplicity.
        e = self.multiplicity
        for m in range(e, max(self._bound, e + 1)):
            if not self.contains(m):
                continue
            is_sum = False
            for x in range(e, m - e + 1):
                if self.contains(x) and self.contains(m - x):
                    is_sum = True
                    break
            if not is_sum:
                yield m

    # -- membership ---------------------------------------------------

    def contains(self, z: int) -> bool:
        if z < 0:
            return False
        if z >= self.conductor:
            return True
        return bool((self._mask >> z) & 1)

    def __contains__(self, z: int) -> bool:
        return self.contains(z)

    def members(self, stop: int) -> Iterator[int]:
        """Members in [0, stop), ascending."""
        return (z for z in range(max(stop, 0)) if self.contains(z))

    # -- invariants ----------------------------------------------------

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def type(self) -> int:
        return len(self.pf)

    @property
    def is_symmetric(self) -> bool:
        """True iff z is a gap exactly when frobenius - z is a member."""
        return 2 * self.genus == self.frobenius + 1

    def apery_set(self, n: int) -> List[int]:
        """Least member in each residue class mod n, ordered by residue."""
        if n <= 0 or not self.contains(n):
            raise NotAMember("%d is not a nonzero member" % n)
        out = []
        for r in range(n):
            z = r
            while not self.contains(z):
                z += n
            out.append(z)
        return out

    def pseudo_frobenius(self) -> Tuple[int, ...]:
        """Gaps z with z + m a member for every nonzero member m.

        For the full set of nonnegative integers the convention is {-1},
        keeping the type equal to 1.
        """
        return self.pf

    def reduction_number_m(self) -> int:
        """Least r >= 1 with (r+1)-fold M equal to e + r-fold M, where M is
        the set of nonzero members and sums are k-fold sumsets."""
        if self.frobenius < 0:
            raise RegularRing("the full semigroup has no such reduction number here")
        if self._red is None:
            cap = self.conductor + self.multiplicity
            width = self.conductor + self.multiplicity * (cap + 2)
            window = (1 << width) - 1
            full = self._mask | (window ^ ((1 << self._bound) - 1))
            power = full & ~1  # nonzero members
            e = self.multiplicity
            for r in range(1, cap + 1):
                nxt = 0
                for a in self.generators:
                    nxt |= power << a
                nxt &= window
                if nxt == (power << e) & window:
                    self._red = r
                    break
                power = nxt
            else:
                raise InternalError("sumset levels failed to stabilize")
        return self._red

    # -- value semantics -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return "NumericalSemigroup(%s)" % list(self.generators)

    def __str__(self) -> str:
        return "<%s>" % ",".join(str(a) for a in self.generators)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Construct the numerical semigroup generated by ``gens``."""
    return NumericalSemigroup(gens)
