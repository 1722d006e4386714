"""Exhaustive enumeration of numerical semigroups by genus.

The removal tree: the root is the full semigroup of nonnegative integers,
and the children of a node are obtained by removing one minimal generator
exceeding the frobenius number.  Every semigroup of genus g+1 arises from
exactly one parent of genus g (put the frobenius number back), so the tree
visits each semigroup exactly once.

A naive subset oracle cross-validates the tree: a genus-g semigroup is a
choice of g gaps inside [1, 2g-1] whose complement is additively closed.

Nodes are immutable and subtrees are independent, so any frontier of the
tree can be expanded in parallel; counts merge order-insensitively and
sorted emission restores the sequential order when needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, List, Optional, Tuple

from .errors import CeilingExceeded, OracleTooLarge
from .semigroup import NumericalSemigroup, from_generators

#: Documented practical ceiling for the tree walk.
GENUS_CEILING = 30

#: Cost ceiling for the subset oracle.
ORACLE_CEILING = 12


@dataclass(frozen=True)
class TreeNode:
    """One semigroup in the removal tree.

    ``mask`` holds membership on [0, size); every integer at or past the
    conductor is a member because size exceeds frobenius + multiplicity
    for every node of the walk.
    """

    mask: int
    size: int
    frobenius: int
    genus: int
    effective_generators: Tuple[int, ...]

    def _multiplicity(self) -> int:
        m = self.mask & ~1
        return (m & -m).bit_length() - 1

    def _is_sum(self, m: int, least: int) -> bool:
        for x in range(least, m - least + 1):
            if (self.mask >> x) & 1 and (self.mask >> (m - x)) & 1:
                return True
        return False

    def child(self, gen: int) -> "TreeNode":
        """Remove one effective generator; it becomes the new frobenius."""
        mask = self.mask & ~(1 << gen)
        node = TreeNode(mask, self.size, gen, self.genus + 1, ())
        least = node._multiplicity()
        effective = tuple(
            m for m in range(gen + 1, min(gen + least, self.size - 1) + 1)
            if not node._is_sum(m, least)
        )
        return TreeNode(mask, self.size, gen, self.genus + 1, effective)

    def minimal_generators(self) -> Tuple[int, ...]:
        least = self._multiplicity()
        hi = min(self.frobenius + least, self.size - 1)
        return tuple(
            m for m in range(least, hi + 1)
            if (self.mask >> m) & 1 and not self._is_sum(m, least)
        )

    def semigroup(self) -> NumericalSemigroup:
        return from_generators(self.minimal_generators() or (1,))


def _root(g_max: int) -> TreeNode:
    size = 3 * g_max + 4
    return TreeNode((1 << size) - 1, size, -1, 0, (1,))


def _walk(node: TreeNode, g_max: int,
          visitor: Optional[Callable[[NumericalSemigroup], None]],
          counts: List[int]) -> None:
    counts[node.genus] += 1
    if visitor is not None:
        visitor(node.semigroup())
    if node.genus < g_max:
        for gen in node.effective_generators:
            _walk(node.child(gen), g_max, visitor, counts)


def enumerate_by_genus(
    g_max: int,
    visitor: Optional[Callable[[NumericalSemigroup], None]] = None,
) -> List[int]:
    """Visit every semigroup of genus <= g_max once, in depth-first order
    with children ordered by removed generator; returns per-genus counts."""
    if g_max < 0:
        raise ValueError("g_max must be nonnegative")
    if g_max > GENUS_CEILING:
        raise CeilingExceeded(
            "genus %d exceeds the enumeration ceiling %d" % (g_max, GENUS_CEILING))
    counts = [0] * (g_max + 1)
    _walk(_root(g_max), g_max, visitor, counts)
    return counts


def iterate(g_max: int) -> Iterator[NumericalSemigroup]:
    """The visit sequence of enumerate_by_genus as a generator."""
    if g_max < 0:
        raise ValueError("g_max must be nonnegative")
    if g_max > GENUS_CEILING:
        raise CeilingExceeded(
            "genus %d exceeds the enumeration ceiling %d" % (g_max, GENUS_CEILING))

    def gen(node: TreeNode) -> Iterator[NumericalSemigroup]:
        yield node.semigroup()
        if node.genus < g_max:
            for g in node.effective_generators:
                yield from gen(node.child(g))

    return gen(_root(g_max))


def filtered(
    g_max: int, predicate: Callable[[NumericalSemigroup], bool]
) -> Iterator[NumericalSemigroup]:
    """Semigroups of genus <= g_max satisfying the predicate, in visit order."""
    return (S for S in iterate(g_max) if predicate(S))


def frontier(depth: int, g_max: int) -> Tuple[List[NumericalSemigroup], List[TreeNode]]:
    """Split the tree at ``depth``: the semigroups above the cut plus the
    independent subtree roots at genus == depth.

    Expanding each root with :func:`enumerate_subtree` and merging counts
    reproduces :func:`enumerate_by_genus`; the merge is order-insensitive.
    """
    if not 0 <= depth <= g_max:
        raise ValueError("need 0 <= depth <= g_max")
    shallow: List[NumericalSemigroup] = []
    roots: List[TreeNode] = []

    def walk(node: TreeNode) -> None:
        if node.genus == depth:
            roots.append(node)
            return
        shallow.append(node.semigroup())
        for g in node.effective_generators:
            walk(node.child(g))

    walk(_root(g_max))
    return shallow, roots


def enumerate_subtree(
    root: TreeNode,
    g_max: int,
    visitor: Optional[Callable[[NumericalSemigroup], None]] = None,
) -> List[int]:
    """Per-genus counts for one subtree (indices root.genus .. g_max)."""
    counts = [0] * (g_max + 1)
    _walk(root, g_max, visitor, counts)
    return counts


def _complement_closed(gaps: Tuple[int, ...], top: int) -> bool:
    gapset = set(gaps)
    for a in gaps:
        for x in range(1, a):
            if x not in gapset and a - x not in gapset:
                return False
    return True


def naive_enumerate(g: int) -> List[NumericalSemigroup]:
    """Oracle enumeration of genus g: test every g-subset of [1, 2g-1] for
    complement-closure.  Output sorted by gap list, lexicographically."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    if g > ORACLE_CEILING:
        raise OracleTooLarge(
            "oracle enumeration is limited to genus %d" % ORACLE_CEILING)
    if g == 0:
        return [from_generators([1])]
    found = []
    for gaps in combinations(range(1, 2 * g), g):
        if not _complement_closed(gaps, 2 * g):
            continue
        bound = 3 * g + 2
        gapset = set(gaps)
        gens = [
            m for m in range(1, bound)
            if m not in gapset and not _has_two_term_sum(m, gapset)
        ]
        found.append((gaps, gens))
    found.sort(key=lambda pair: pair[0])
    return [from_generators(gens) for _, gens in found]


def _has_two_term_sum(m: int, gapset: set) -> bool:
    for x in range(1, m // 2 + 1):
        if x not in gapset and (m - x) not in gapset and m - x > 0:
            return True
    return False
