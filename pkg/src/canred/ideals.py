"""Cofinite integer sets and relative ideals over a numerical semigroup.

Exponent-set arithmetic for monomial fractional ideals: Minkowski sums
realize ideal products, colons realize ideal quotients, and gap counts
realize colengths.  A cofinite set is stored as a bit mask for its finite
part plus a threshold beyond which every integer belongs; equality is
always extensional because construction normalizes both parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from .errors import (
    BaseMismatch,
    InternalDisagreement,
    InternalError,
    NotContained,
    RegularRing,
)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class ValueElement:
    """Exponent of a monomial t^value."""

    value: int

    def __str__(self) -> str:
        return "t^%d" % self.value


class CofiniteSet:
    """A set of integers containing every integer at or above a threshold.

    Normal form: ``lo`` is the least member, the threshold is minimal, and
    the mask covers membership on [lo, threshold).  Two sets compare equal
    iff they have the same members, regardless of how they were built.
    """

    __slots__ = ("lo", "threshold", "_mask")

    def __init__(self, members: Iterable[int] = (), threshold: int = 0):
        ms = {int(m) for m in members}
        ms = {m for m in ms if m < threshold}
        while threshold - 1 in ms:
            ms.remove(threshold - 1)
            threshold -= 1
        lo = min(ms) if ms else threshold
        mask = 0
        for m in ms:
            mask |= 1 << (m - lo)
        self.lo = lo
        self.threshold = threshold
        self._mask = mask

    @classmethod
    def _raw(cls, lo: int, threshold: int, mask: int) -> "CofiniteSet":
        out = object.__new__(cls)
        out.lo = lo
        out.threshold = threshold
        out._mask = mask
        return out

    @classmethod
    def _from_window(cls, a: int, b: int, mask: int) -> "CofiniteSet":
        """Normalize the set {a+i : bit i of mask} with everything >= b."""
        if b > a:
            mask &= (1 << (b - a)) - 1
        else:
            mask = 0
        t = b
        while t > a and (mask >> (t - 1 - a)) & 1:
            t -= 1
        mask &= (1 << (t - a)) - 1
        if mask:
            lo = a + (mask & -mask).bit_length() - 1
            mask >>= lo - a
        else:
            lo = t
        return cls._raw(lo, t, mask)

    # -- membership ------------------------------------------------------

    def contains(self, z: int) -> bool:
        if z >= self.threshold:
            return True
        if z < self.lo:
            return False
        return bool((self._mask >> (z - self.lo)) & 1)

    def __contains__(self, z: int) -> bool:
        return self.contains(z)

    def window_mask(self, a: int, b: int) -> int:
        """Bit i is set iff a + i is a member, for 0 <= i < b - a."""
        if b <= a:
            return 0
        t = self.threshold
        lo = self.lo
        out = 0
        if t < b:
            t0 = t if t > a else a
            out = ((1 << (b - t0)) - 1) << (t0 - a)
        f0 = lo if lo > a else a
        f1 = t if t < b else b
        if f0 < f1:
            seg = (self._mask >> (f0 - lo)) & ((1 << (f1 - f0)) - 1)
            out |= seg << (f0 - a)
        return out

    @property
    def finite_members(self) -> List[int]:
        """Members below the threshold, ascending."""
        out = []
        mask = self._mask
        z = self.lo
        while mask:
            if mask & 1:
                out.append(z)
            mask >>= 1
            z += 1
        return out

    def members_below(self, stop: int) -> List[int]:
        return [z for z in range(self.lo, stop) if self.contains(z)]

    # -- arithmetic --------------------------------------------------------

    def translate(self, x: int) -> "CofiniteSet":
        return CofiniteSet._raw(self.lo + x, self.threshold + x, self._mask)

    def sum(self, other: "CofiniteSet") -> "CofiniteSet":
        """Minkowski sum {x + y}."""
        w0 = self.lo + other.lo
        tail = min(self.lo + other.threshold, other.lo + self.threshold)
        acc = 0
        for x in self.finite_members:
            acc |= other.window_mask(w0 - x, tail - x)
        return CofiniteSet._from_window(w0, tail, acc)

    def issubset(self, other: "CofiniteSet") -> bool:
        a = min(self.lo, other.lo)
        b = max(self.threshold, other.threshold)
        return self.window_mask(a, b) & ~other.window_mask(a, b) == 0

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CofiniteSet):
            return NotImplemented
        return (
            self.lo == other.lo
            and self.threshold == other.threshold
            and self._mask == other._mask
        )

    def __hash__(self) -> int:
        return hash((self.lo, self.threshold, self._mask))

    def to_dict(self) -> Dict[str, object]:
        return {
            "lo": self.lo,
            "threshold": self.threshold,
            "members": self.finite_members,
        }

    def __repr__(self) -> str:
        return "CofiniteSet(%s, threshold=%d)" % (self.finite_members, self.threshold)

    def __str__(self) -> str:
        fin = ", ".join(str(m) for m in self.finite_members)
        tail = "z>=%d" % self.threshold
        return "{%s} u {%s}" % (fin, tail) if fin else "{%s}" % tail


class RelativeIdeal:
    """A cofinite exponent set closed under adding semigroup members.

    Sums, colons and translations stay inside this class; ``E - F`` is the
    colon {z : z + F contained in E}, not a set difference.
    """

    __slots__ = ("base", "carrier", "_gens")

    def __init__(self, base: NumericalSemigroup, carrier: CofiniteSet,
                 *, _checked: bool = False):
        if not _checked:
            for z in carrier.finite_members:
                for a in base.generators:
                    if not carrier.contains(z + a):
                        raise ValueError(
                            "set is not closed under the semigroup action: "
                            "%d + %d missing" % (z, a))
        self.base = base
        self.carrier = carrier
        self._gens = None

    @classmethod
    def generated_by(cls, base: NumericalSemigroup,
                     exponents: Iterable[int]) -> "RelativeIdeal":
        """The ideal of all exponent + member sums."""
        exps = sorted({int(x) for x in exponents})
        if not exps:
            raise ValueError("at least one exponent is required")
        threshold = exps[-1] + base.conductor
        members = {x + m for x in exps for m in base.members(threshold - x)}
        return cls(base, CofiniteSet(members, threshold), _checked=True)

    # -- views -------------------------------------------------------------

    @property
    def lo(self) -> int:
        """The least element."""
        return self.carrier.lo

    @property
    def threshold(self) -> int:
        return self.carrier.threshold

    def contains(self, z: int) -> bool:
        return self.carrier.contains(z)

    def __contains__(self, z: int) -> bool:
        return self.carrier.contains(z)

    def minimal_generators(self) -> Tuple[int, ...]:
        """Elements not expressible as a member plus a nonzero semigroup
        member; every element is one of these plus a semigroup member."""
        if self._gens is None:
            gens = self.base.generators
            top = gens[-1]
            w0, w1 = self.lo, self.threshold + gens[0]
            ones = (1 << (w1 - w0)) - 1
            # one wide window; per-shift segments come out by shifting
            wide = self.carrier.window_mask(w0 - top, w1)
            shifted = 0
            for a in gens:
                shifted |= wide >> (top - a)
            lead = (wide >> top) & ~shifted & ones
            out = []
            while lead:
                low = lead & -lead
                out.append(w0 + low.bit_length() - 1)
                lead ^= low
            self._gens = tuple(out)
        return self._gens

    # -- arithmetic ----------------------------------------------------------

    def _require_same_base(self, other: "RelativeIdeal") -> None:
        if self.base != other.base:
            raise BaseMismatch(
                "ideals live over %s and %s" % (self.base, other.base))

    def sum(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """Minkowski sum; realizes the product of monomial ideals."""
        self._require_same_base(other)
        return RelativeIdeal(self.base, self.carrier.sum(other.carrier),
                             _checked=True)

    def colon(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """{z : z + other contained in self}."""
        self._require_same_base(other)
        gens = other.minimal_generators()
        low, top = gens[0], gens[-1]
        w0 = self.lo - top
        w1 = self.threshold - low
        if w1 <= w0:
            w1 = w0
        acc = (1 << (w1 - w0)) - 1
        wide = self.carrier.window_mask(w0 + low, w1 + top)
        for g in gens:
            acc &= wide >> (g - low)
        return RelativeIdeal(
            self.base, CofiniteSet._from_window(w0, w1, acc), _checked=True)

    def translate(self, x: int) -> "RelativeIdeal":
        return RelativeIdeal(self.base, self.carrier.translate(x),
                             _checked=True)

    def __add__(self, other):
        if isinstance(other, RelativeIdeal):
            return self.sum(other)
        if isinstance(other, int):
            return self.translate(other)
        return NotImplemented

    def __radd__(self, other):
        if isinstance(other, int):
            return self.translate(other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, RelativeIdeal):
            return self.colon(other)
        return NotImplemented

    def issubset(self, other: "RelativeIdeal") -> bool:
        self._require_same_base(other)
        return self.carrier.issubset(other.carrier)

    # -- numeric invariants ---------------------------------------------------

    def mu(self) -> int:
        """Number of minimal generators."""
        return len(self.minimal_generators())

    def ideal_type(self) -> int:
        """Size of (self - M) outside self, M the maximal ideal."""
        if self.base.frobenius < 0:
            raise RegularRing("type is not defined over the full semigroup")
        quot = self.colon(maximal_ideal(self.base))
        a = quot.lo
        b = max(quot.threshold, self.threshold)
        diff = quot.carrier.window_mask(a, b) & ~self.carrier.window_mask(a, b)
        return diff.bit_count()

    def colength(self) -> int:
        """Number of semigroup members outside self."""
        unit = unit_ideal(self.base)
        if not self.issubset(unit):
            raise NotContained("ideal is not contained in the semigroup")
        b = max(self.threshold, self.base.conductor)
        diff = unit.carrier.window_mask(0, b) & ~self.carrier.window_mask(0, b)
        return diff.bit_count()

    def is_reduction_of_maximal_ideal(self) -> bool:
        """Whether some power step (r+1)M = self + rM holds.

        Computed two ways: by iterating sumsets and by the valuation
        shortcut (the least exponent equals the multiplicity); the two must
        agree.
        """
        if self.base.frobenius < 0:
            raise RegularRing("no maximal-ideal reductions over the full semigroup")
        m = maximal_ideal(self.base)
        if not self.issubset(m):
            raise NotContained("a reduction must sit inside the maximal ideal")
        shortcut = self.lo == self.base.multiplicity
        cap = self.base.conductor + self.base.multiplicity
        iterated = False
        power = m
        for _ in range(cap):
            nxt = power.sum(m)
            if nxt == self.sum(power):
                iterated = True
                break
            power = nxt
        if iterated != shortcut:
            raise InternalDisagreement(
                "sumset iteration says %s, valuation shortcut says %s for %s"
                % (iterated, shortcut, self))
        return iterated

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return self.base == other.base and self.carrier == other.carrier

    def __hash__(self) -> int:
        return hash((self.base, self.carrier))

    def to_dict(self) -> Dict[str, object]:
        return self.carrier.to_dict()

    def monomial_generators(self) -> Tuple[ValueElement, ...]:
        return tuple(ValueElement(x) for x in self.minimal_generators())

    def __repr__(self) -> str:
        return "RelativeIdeal(%s, %r)" % (self.base, self.carrier)

    def __str__(self) -> str:
        return "(%s)" % ", ".join(str(v) for v in self.monomial_generators())


@dataclass(frozen=True)
class MonomialCanonicalFamily:
    """The monomial canonical ideals of a semigroup, described by shifts.

    ``shifts`` is the set of x with x + K0 inside the semigroup, K0 the
    normalized canonical set.  ``maximal_shifts`` are the shifts of the
    inclusion-maximal ideals in the family.  ``colengths`` covers every
    shift up to max(maximal_shifts) + conductor; larger shifts only give
    larger colengths.  ``min_colength`` ranges over proper ideals of the
    family (the zero shift, when present, is the whole ring).
    """

    shifts: RelativeIdeal
    maximal_shifts: Tuple[int, ...]
    colengths: Dict[int, int]
    min_colength: int


def _cached(func):
    return lru_cache(maxsize=None)(func)


@_cached
def unit_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """The semigroup itself as a relative ideal."""
    carrier = CofiniteSet(S.members(S.conductor), S.conductor)
    return RelativeIdeal(S, carrier, _checked=True)


@_cached
def maximal_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """The nonzero members."""
    members = [m for m in S.members(S.conductor) if m > 0]
    carrier = CofiniteSet(members, max(S.conductor, 1))
    return RelativeIdeal(S, carrier, _checked=True)


@_cached
def canonical_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """The normalized canonical set {z : frobenius - z not a member}.

    Its least element is 0 and it contains everything past the frobenius
    number; translating it through the family of shifts yields every
    monomial canonical ideal inside the semigroup.
    """
    f = S.frobenius
    members = [z for z in range(0, max(f + 1, 0)) if not S.contains(f - z)]
    carrier = CofiniteSet(members, f + 1)
    return RelativeIdeal(S, carrier, _checked=True)


@_cached
def trace(S: NumericalSemigroup) -> RelativeIdeal:
    """K0 + (S - K0); the exponent set of the trace of the canonical module."""
    k0 = canonical_ideal(S)
    return k0.sum(unit_ideal(S).colon(k0))


@_cached
def canonical_family(S: NumericalSemigroup) -> MonomialCanonicalFamily:
    """All shifts x with x + K0 inside the semigroup, with colengths."""
    k0 = canonical_ideal(S)
    shifts = unit_ideal(S).colon(k0)
    maximal = shifts.minimal_generators()
    bound = max(maximal) + S.conductor
    colengths = {
        x: k0.translate(x).colength()
        for x in shifts.carrier.members_below(bound + 1)
    }
    if shifts.contains(0):
        proper = S.generators  # symmetric case: K0 is the semigroup itself
    else:
        proper = maximal
    min_colength = min(k0.translate(x).colength() for x in proper)
    return MonomialCanonicalFamily(shifts, maximal, colengths, min_colength)


@_cached
def canonical_index(S: NumericalSemigroup) -> int:
    """Least n >= 1 with the (n+1)-fold sumset of K0 equal to the n-fold."""
    k0 = canonical_ideal(S)
    cap = S.conductor + S.multiplicity
    power = k0
    for n in range(1, cap + 1):
        nxt = power.sum(k0)
        if nxt == power:
            return n
        power = nxt
    raise InternalError("canonical powers failed to stabilize")


def translate(E: RelativeIdeal, x: int) -> RelativeIdeal:
    """x + E."""
    return E.translate(x)


def is_reduction_of_m(E: RelativeIdeal) -> bool:
    """Whether E is a reduction of the maximal ideal of its base."""
    return E.is_reduction_of_maximal_ideal()
