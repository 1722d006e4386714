"""Structural checks over the census, plus audits of published examples.

Every check restates a ring-theoretic assertion at the level of monomial
exponent sets; a Violation is emitted only when the restated assertion is
literally false for some semigroup.  Violations never abort a run.  Check
C12 is informational (report-only): callers exclude it when gating on the
violation count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .census import iterate
from .classification import ClassificationReport, classify, ncr_criteria
from .errors import InternalError
from .ideals import (
    CofiniteSet,
    MonomialCanonicalFamily,
    RelativeIdeal,
    canonical_family,
    canonical_ideal,
    maximal_ideal,
    unit_ideal,
)
from .semigroup import NumericalSemigroup, from_generators

CHECK_IDS: Tuple[str, ...] = tuple("C%d" % i for i in range(1, 16))

#: Checks that also make sense for the full semigroup (the regular ring);
#: the rest restate assertions whose hypotheses exclude it.
_REGULAR_OK = frozenset({"C1", "C2", "C7", "C11"})

#: Conductor gate for the exhaustive intermediate-ideal sweep.
_MIMU_CONDUCTOR_CAP = 20


@dataclass(frozen=True)
class Violation:
    """A failed check: which check, where, and a structured witness."""

    check_id: str
    generators: Tuple[int, ...]
    witness: Dict[str, object]


@dataclass(frozen=True)
class CensusRow:
    """Predicate counts for one genus of the census."""

    genus: int
    total: int
    gorenstein: int
    almost_gorenstein: int
    nearly_gorenstein: int
    canonical_reduction: int
    minimal_multiplicity: int
    two_agl: int
    cr_without_ag: int
    no_canonical_reduction: int


class _Ctx:
    """Shared per-semigroup data for the checks."""

    def __init__(self, S: NumericalSemigroup):
        self.S = S
        self.report = classify(S)
        self.k0 = canonical_ideal(S)
        self.m = maximal_ideal(S)
        self.unit = unit_ideal(S)
        self.family: MonomialCanonicalFamily = canonical_family(S)
        self.a0 = self.family.shifts

    def violation(self, check_id: str, **witness) -> Violation:
        return Violation(check_id, self.S.generators, dict(witness))


def _c1(ctx: _Ctx) -> Iterator[Violation]:
    """Hierarchy: Gorenstein implies almost Gorenstein implies a canonical
    reduction exists."""
    r = ctx.report
    if r.gorenstein and not r.almost_gorenstein:
        yield ctx.violation("C1", broken="gorenstein->almost_gorenstein")
    if r.almost_gorenstein and not r.has_canonical_reduction:
        yield ctx.violation("C1", broken="almost_gorenstein->canonical_reduction")


def _c2(ctx: _Ctx) -> Iterator[Violation]:
    """Nearly Gorenstein implies a canonical reduction exists."""
    r = ctx.report
    if r.nearly_gorenstein and not r.has_canonical_reduction:
        yield ctx.violation("C2", broken="nearly_gorenstein->canonical_reduction")


def _c3(ctx: _Ctx) -> Iterator[Violation]:
    """With a canonical reduction: minimal multiplicity holds iff the ring
    is almost Gorenstein and the colength of e + K0 is 2."""
    r = ctx.report
    if not r.has_canonical_reduction:
        return
    length = ctx.k0.translate(ctx.S.multiplicity).colength()
    if r.minimal_multiplicity != (r.almost_gorenstein and length == 2):
        yield ctx.violation(
            "C3", minimal_multiplicity=r.minimal_multiplicity,
            almost_gorenstein=r.almost_gorenstein, colength=length)


def _c4(ctx: _Ctx) -> Iterator[Violation]:
    """With a canonical reduction: the colength of e + K0 is at most
    e - t + 1, with equality iff almost Gorenstein."""
    r = ctx.report
    if not r.has_canonical_reduction:
        return
    length = ctx.k0.translate(ctx.S.multiplicity).colength()
    if length > r.colength_bound:
        yield ctx.violation("C4", colength=length, bound=r.colength_bound)
    if (length == r.colength_bound) != r.almost_gorenstein:
        yield ctx.violation(
            "C4", colength=length, bound=r.colength_bound,
            almost_gorenstein=r.almost_gorenstein)


def _c5(ctx: _Ctx) -> Iterator[Violation]:
    """M + K0 = M + (K0 - M)."""
    left = ctx.m.sum(ctx.k0)
    right = ctx.m.sum(ctx.k0.colon(ctx.m))
    if left != right:
        yield ctx.violation(
            "C5", left=left.to_dict(), right=right.to_dict())


def _c6(ctx: _Ctx) -> Iterator[Violation]:
    """Monomial colength minimum 2 forces a canonical reduction."""
    r = ctx.report
    if r.min_mono_colength == 2 and not r.has_canonical_reduction:
        yield ctx.violation("C6", min_mono_colength=2)


def _c7(ctx: _Ctx) -> Iterator[Violation]:
    """Canonical index 1 iff the semigroup is symmetric."""
    r = ctx.report
    if (r.canonical_index == 1) != r.gorenstein:
        yield ctx.violation(
            "C7", canonical_index=r.canonical_index, gorenstein=r.gorenstein)


def _c8(ctx: _Ctx) -> Iterator[Violation]:
    """K0 - M has exactly t + 1 minimal generators."""
    count = ctx.k0.colon(ctx.m).mu()
    if count != ctx.S.type + 1:
        yield ctx.violation("C8", mu=count, type=ctx.S.type)


def _c9(ctx: _Ctx) -> Iterator[Violation]:
    """Every non-maximal shift in the canonical family is a nonzero member
    plus another shift (so maximal translates determine the family)."""
    maximal = set(ctx.family.maximal_shifts)
    lo = ctx.a0.lo
    for x in ctx.family.colengths:
        if x in maximal:
            continue
        if not any(ctx.a0.contains(x - m)
                   for m in ctx.S.members(x - lo + 1) if m > 0):
            yield ctx.violation("C9", shift=x)


def _c10(ctx: _Ctx) -> Iterator[Violation]:
    """Canonical index 2 identities, with J = 2K0: (i) K0 - (S - K0) = J;
    (ii) J + J = J = K0 + J; (iii) K0 - M inside J and J != K0;
    (iv) almost Gorenstein iff J = K0 - M = S - M, and S - M is the
    semigroup together with its pseudo-frobenius elements."""
    if ctx.report.canonical_index != 2:
        return
    k0, m, unit = ctx.k0, ctx.m, ctx.unit
    square = k0.sum(k0)
    if k0.colon(ctx.a0) != square:
        yield ctx.violation("C10", identity="i", square=square.to_dict())
    if square.sum(square) != square or k0.sum(square) != square:
        yield ctx.violation("C10", identity="ii", square=square.to_dict())
    k_over_m = k0.colon(m)
    if not k_over_m.issubset(square) or square == k0:
        yield ctx.violation("C10", identity="iii", square=square.to_dict())
    s_over_m = unit.colon(m)
    expected = RelativeIdeal(
        ctx.S,
        CofiniteSet(
            list(unit.carrier.finite_members) + list(ctx.S.pf),
            ctx.S.conductor),
        _checked=True)
    if s_over_m != expected:
        yield ctx.violation("C10", identity="iv", detail="S - M != S u PF")
    rhs = square == k_over_m and k_over_m == s_over_m
    if ctx.report.almost_gorenstein != rhs:
        yield ctx.violation(
            "C10", identity="iv",
            almost_gorenstein=ctx.report.almost_gorenstein, identities=rhs)


def _c11(ctx: _Ctx) -> Iterator[Violation]:
    """The three canonical-reduction criteria (gap formula, shift
    membership, sumset reduction) agree."""
    formula, shift, reduction = ncr_criteria(ctx.S)
    if not formula == shift == reduction:
        yield ctx.violation(
            "C11", formula=formula, shift=shift, reduction=reduction)


def _c12(ctx: _Ctx) -> Iterator[Violation]:
    """No monomial canonical ideal inside a non-symmetric semigroup is its
    own integral closure {z member : z >= shift}.  Report-only."""
    if ctx.S.is_symmetric:
        return
    S = ctx.S
    for x in ctx.family.colengths:
        if x >= S.conductor:
            closure = CofiniteSet((), x)
        else:
            closure = CofiniteSet(
                [z for z in S.members(S.conductor) if z >= x], S.conductor)
        translated = ctx.k0.translate(x).carrier
        if not translated.issubset(closure) or translated == closure:
            yield ctx.violation("C12", shift=x, closure=closure.to_dict())


def _c13(ctx: _Ctx) -> Iterator[Violation]:
    """No power sumset of M is a translate of K0, except through the
    symmetric case where K0 is the semigroup itself."""
    power = ctx.m
    e = ctx.S.multiplicity
    for i in (1, 2, 3):
        if i > 1:
            power = power.sum(ctx.m)
        if power == ctx.k0.translate(i * e) and not ctx.S.is_symmetric:
            yield ctx.violation("C13", power=i)


def _c14(ctx: _Ctx) -> Iterator[Violation]:
    """With a canonical reduction: the colength of e + K0 is the least
    monomial colength, and only the shift e attains it (unit shift aside)."""
    r = ctx.report
    if not r.has_canonical_reduction:
        return
    e = ctx.S.multiplicity
    length = ctx.k0.translate(e).colength()
    if length != r.min_mono_colength:
        yield ctx.violation(
            "C14", colength=length, min_mono_colength=r.min_mono_colength)
    for x, l in ctx.family.colengths.items():
        if x != 0 and l == r.min_mono_colength and x != e:
            yield ctx.violation("C14", other_shift=x, colength=l)


def _c15(ctx: _Ctx) -> Iterator[Violation]:
    """For a maximal canonical translate inside any intermediate ideal J,
    the colon (x + K0) - J has exactly type(J) minimal generators.  Swept
    exhaustively for conductors up to the cap."""
    if ctx.S.conductor > _MIMU_CONDUCTOR_CAP:
        return
    for x in ctx.family.maximal_shifts:
        inner = ctx.k0.translate(x)
        for mid in _intermediate_ideals(ctx.S, inner):
            left = inner.colon(mid).mu()
            right = mid.ideal_type()
            if left != right:
                yield ctx.violation(
                    "C15", shift=x, ideal=mid.to_dict(), mu=left, type=right)


_CHECKS = {
    "C1": _c1, "C2": _c2, "C3": _c3, "C4": _c4, "C5": _c5,
    "C6": _c6, "C7": _c7, "C8": _c8, "C9": _c9, "C10": _c10,
    "C11": _c11, "C12": _c12, "C13": _c13, "C14": _c14, "C15": _c15,
}


def _intermediate_ideals(
    S: NumericalSemigroup, inner: RelativeIdeal
) -> Iterator[RelativeIdeal]:
    """All relative ideals J with inner inside J inside the semigroup.

    The complement of inner in the semigroup is finite; ideals correspond
    to its subsets closed upward under adding generators.
    """
    bound = max(S.conductor, inner.threshold)
    diff = [z for z in range(bound)
            if S.contains(z) and not inner.contains(z)]
    dset = set(diff)
    diff.sort(reverse=True)
    gens = S.generators
    w0 = min(diff, default=inner.lo)
    if inner.lo < w0:
        w0 = inner.lo
    base_mask = inner.carrier.window_mask(w0, inner.threshold)
    threshold = inner.threshold
    out: List[RelativeIdeal] = []

    def rec(i: int, mask: int, chosen: frozenset) -> None:
        if i == len(diff):
            carrier = CofiniteSet._from_window(w0, threshold, mask)
            out.append(RelativeIdeal(S, carrier, _checked=True))
            return
        z = diff[i]
        rec(i + 1, mask, chosen)
        if all((z + a) not in dset or (z + a) in chosen for a in gens):
            rec(i + 1, mask | (1 << (z - w0)), chosen | {z})

    rec(0, base_mask, frozenset())
    return iter(out)


def resolve_check_ids(check_ids: Optional[Iterable[str]]) -> Tuple[str, ...]:
    if check_ids is None:
        return CHECK_IDS
    wanted = list(check_ids)
    unknown = [c for c in wanted if c not in _CHECKS]
    if unknown:
        raise ValueError("unknown check ids: %s" % ", ".join(unknown))
    return tuple(c for c in CHECK_IDS if c in set(wanted))


def run_checks(
    g_max: int, check_ids: Optional[Iterable[str]] = None
) -> Tuple[List[Violation], List[CensusRow]]:
    """Run the requested checks over every semigroup of genus <= g_max.

    Returns the violations sorted by (genus, gap list) and one census row
    per genus.  An internal disagreement inside the classifier is reported
    as a C11 violation rather than aborting the run.
    """
    ids = resolve_check_ids(check_ids)
    tallies = [
        {"total": 0, "G": 0, "AG": 0, "NG": 0, "CR": 0, "MM": 0,
         "2AGL": 0, "CRnAG": 0, "noCR": 0}
        for _ in range(g_max + 1)
    ]
    flagged: List[Tuple[int, Tuple[int, ...], Violation]] = []

    for S in iterate(g_max):
        try:
            ctx = _Ctx(S)
        except InternalError as exc:
            flagged.append(
                (S.genus, S.gaps,
                 Violation("C11", S.generators, {"error": str(exc)})))
            continue
        r = ctx.report
        t = tallies[S.genus]
        t["total"] += 1
        t["G"] += r.gorenstein
        t["AG"] += r.almost_gorenstein
        t["NG"] += r.nearly_gorenstein
        t["CR"] += r.has_canonical_reduction
        t["MM"] += r.minimal_multiplicity
        t["2AGL"] += r.two_agl
        t["CRnAG"] += r.has_canonical_reduction and not r.almost_gorenstein
        t["noCR"] += not r.has_canonical_reduction
        regular = S.frobenius < 0
        for cid in ids:
            if regular and cid not in _REGULAR_OK:
                continue
            for violation in _CHECKS[cid](ctx):
                flagged.append((S.genus, S.gaps, violation))

    flagged.sort(key=lambda item: (item[0], item[1]))
    rows = [
        CensusRow(
            genus=g, total=t["total"], gorenstein=t["G"],
            almost_gorenstein=t["AG"], nearly_gorenstein=t["NG"],
            canonical_reduction=t["CR"], minimal_multiplicity=t["MM"],
            two_agl=t["2AGL"], cr_without_ag=t["CRnAG"],
            no_canonical_reduction=t["noCR"])
        for g, t in enumerate(tallies)
    ]
    return [v for _, _, v in flagged], rows


# -- audits of published example values ------------------------------------


@dataclass(frozen=True)
class FamilyAudit:
    """One member of the two-block family: generators e..e+i and
    e+i+j..2e+i+j-1, published as always admitting a canonical reduction
    generated by the exponents e+1..e+j-1."""

    e: int
    i: int
    j: int
    generators: Tuple[int, ...]
    has_canonical_reduction: bool
    cr_agrees: bool
    claimed_exponents: Tuple[int, ...]
    claimed_is_canonical_reduction: bool
    claimed_agrees: bool


@dataclass(frozen=True)
class ProgressionAudit:
    """One three-term progression a, a+1, a+2, published with frobenius
    2a - 1 and a canonical reduction exactly for a in {3, 4, 5, 6}."""

    a: int
    generators: Tuple[int, ...]
    frobenius: int
    claimed_frobenius: int
    frobenius_agrees: bool
    has_canonical_reduction: bool
    claimed_canonical_reduction: bool
    cr_agrees: bool


@dataclass(frozen=True)
class ShiftColengthAudit:
    """A maximal canonical translate of the 3,4,5 semigroup with its
    colength; published lengths exist for the shifts 3 and 4."""

    shift: int
    ideal: Tuple[int, ...]
    colength: int
    claimed_colength: Optional[int]
    agrees: Optional[bool]


@dataclass(frozen=True)
class PaperAudit:
    family: Tuple[FamilyAudit, ...]
    progression: Tuple[ProgressionAudit, ...]
    shift_colengths: Tuple[ShiftColengthAudit, ...]


def _family_parameters(e_range=range(4, 9)) -> Iterator[Tuple[int, int, int]]:
    for e in e_range:
        for j in range(2, e):
            for i in range(j - 1, e - j):
                yield e, i, j


def audit_paper_examples() -> PaperAudit:
    """Recompute the published example values and mark agreement.

    Three blocks: the (e, i, j) family with e in [4, 8]; the progressions
    a, a+1, a+2 for a in [3, 50]; and the per-shift colengths of the 3,4,5
    semigroup.  Disagreements are reported, never silently corrected.
    """
    family = []
    for e, i, j in _family_parameters():
        gens = list(range(e, e + i + 1)) + list(range(e + i + j, 2 * e + i + j))
        S = from_generators(gens)
        r = classify(S)
        claimed = tuple(range(e + 1, e + j))
        claimed_ideal = RelativeIdeal.generated_by(S, claimed)
        claimed_is_cr = (
            r.has_canonical_reduction
            and claimed_ideal == canonical_ideal(S).translate(S.multiplicity))
        family.append(FamilyAudit(
            e=e, i=i, j=j, generators=S.generators,
            has_canonical_reduction=r.has_canonical_reduction,
            cr_agrees=r.has_canonical_reduction,
            claimed_exponents=claimed,
            claimed_is_canonical_reduction=claimed_is_cr,
            claimed_agrees=claimed_is_cr,
        ))

    progression = []
    for a in range(3, 51):
        S = from_generators([a, a + 1, a + 2])
        r = classify(S)
        claimed_f = 2 * a - 1
        claimed_cr = a in (3, 4, 5, 6)
        progression.append(ProgressionAudit(
            a=a, generators=S.generators, frobenius=S.frobenius,
            claimed_frobenius=claimed_f,
            frobenius_agrees=S.frobenius == claimed_f,
            has_canonical_reduction=r.has_canonical_reduction,
            claimed_canonical_reduction=claimed_cr,
            cr_agrees=r.has_canonical_reduction == claimed_cr,
        ))

    S = from_generators([3, 4, 5])
    k0 = canonical_ideal(S)
    published = {3: 2, 4: 4}
    shift_colengths = []
    for x in canonical_family(S).maximal_shifts:
        ideal = k0.translate(x)
        length = ideal.colength()
        claimed = published.get(x)
        shift_colengths.append(ShiftColengthAudit(
            shift=x, ideal=ideal.minimal_generators(), colength=length,
            claimed_colength=claimed,
            agrees=None if claimed is None else claimed == length,
        ))

    return PaperAudit(tuple(family), tuple(progression), tuple(shift_colengths))
