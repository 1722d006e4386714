"""Gorenstein-hierarchy predicates and the per-semigroup report.

All predicates are decided on exponent sets.  With K0 the normalized
canonical set, M the nonzero members and e the multiplicity:

* symmetric (Gorenstein)      K0 equals the semigroup
* almost Gorenstein           M + K0 inside M
* nearly Gorenstein           M inside K0 + (S - K0)
* canonical reduction exists  e + K0 inside the semigroup
* 2-AGL                       canonical index 2 and |2K0 outside K0| = 2

The canonical-reduction decision is triple-redundant: the gap formula, the
shift test e in (S - K0), and the sumset reduction test must all agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import InternalDisagreement, InternalError
from .ideals import (
    canonical_family,
    canonical_ideal,
    canonical_index,
    maximal_ideal,
    unit_ideal,
)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class ClassificationReport:
    """Every invariant the classifier computes for one semigroup.

    ``min_mono_colength`` is the least colength over proper ideals in the
    monomial canonical family; ``colength_bound`` is e - t + 1.  For the
    full semigroup (the regular ring) every hierarchy predicate is true and
    ``reduction_number_m`` is reported as 1.
    """

    generators: Tuple[int, ...]
    multiplicity: int
    embedding_dimension: int
    genus: int
    frobenius: int
    type: int
    pf: Tuple[int, ...]
    gorenstein: bool
    almost_gorenstein: bool
    nearly_gorenstein: bool
    has_canonical_reduction: bool
    minimal_multiplicity: bool
    two_agl: bool
    reduction_number_m: int
    canonical_index: int
    min_mono_colength: int
    colength_bound: int


def ncr_criteria(S: NumericalSemigroup) -> Tuple[bool, bool, bool]:
    """The three independent canonical-reduction tests.

    Returned in order: gap formula (e + f - z a member for every gap z),
    shift membership (e in S - K0), and reduction (e + K0 inside M and a
    sumset reduction of M).  All three are vacuously true for the full
    semigroup.
    """
    if S.frobenius < 0:
        return True, True, True
    e, f = S.multiplicity, S.frobenius
    by_formula = all(S.contains(e + f - z) for z in S.gaps)
    k0 = canonical_ideal(S)
    by_shift = unit_ideal(S).colon(k0).contains(e)
    shifted = k0.translate(e)
    if shifted.issubset(maximal_ideal(S)):
        by_reduction = shifted.is_reduction_of_maximal_ideal()
    else:
        by_reduction = False
    return by_formula, by_shift, by_reduction


def has_canonical_reduction(S: NumericalSemigroup) -> bool:
    """Whether some monomial canonical ideal is a reduction of the maximal
    ideal; the three criteria must agree."""
    crit = ncr_criteria(S)
    if len(set(crit)) != 1:
        raise InternalDisagreement(
            "canonical-reduction criteria disagree on %s: "
            "formula=%s shift=%s reduction=%s" % (S, *crit))
    return crit[0]


def is_almost_gorenstein(S: NumericalSemigroup) -> bool:
    """M + K0 inside M (true for the full semigroup)."""
    if S.frobenius < 0:
        return True
    m = maximal_ideal(S)
    return m.sum(canonical_ideal(S)).issubset(m)


def is_nearly_gorenstein(S: NumericalSemigroup) -> bool:
    """M inside the trace K0 + (S - K0)."""
    from .ideals import trace

    return maximal_ideal(S).issubset(trace(S))


def is_two_agl(S: NumericalSemigroup) -> bool:
    """Canonical index 2 and exactly two elements of 2K0 outside K0."""
    if canonical_index(S) != 2:
        return False
    k0 = canonical_ideal(S)
    square = k0.sum(k0)
    a, b = k0.lo, max(k0.threshold, square.threshold)
    extra = square.carrier.window_mask(a, b) & ~k0.carrier.window_mask(a, b)
    return extra.bit_count() == 2


def _validate(r: ClassificationReport) -> None:
    ok = (
        (not r.gorenstein or r.almost_gorenstein)
        and (not r.almost_gorenstein or r.has_canonical_reduction)
        and (not r.nearly_gorenstein or r.has_canonical_reduction)
        and (r.gorenstein == (r.canonical_index == 1))
        and (not r.two_agl or (r.canonical_index == 2 and not r.gorenstein))
        and (r.minimal_multiplicity == (r.embedding_dimension == r.multiplicity))
    )
    if not ok:
        raise InternalError("inconsistent classification report: %r" % (r,))


def classify(S: NumericalSemigroup) -> ClassificationReport:
    """Assemble the full report; raises InternalError if the computed
    predicates violate the hierarchy they are known to satisfy."""
    regular = S.frobenius < 0
    report = ClassificationReport(
        generators=S.generators,
        multiplicity=S.multiplicity,
        embedding_dimension=S.embedding_dimension,
        genus=S.genus,
        frobenius=S.frobenius,
        type=S.type,
        pf=S.pf,
        gorenstein=S.is_symmetric,
        almost_gorenstein=is_almost_gorenstein(S),
        nearly_gorenstein=is_nearly_gorenstein(S),
        has_canonical_reduction=has_canonical_reduction(S),
        minimal_multiplicity=S.embedding_dimension == S.multiplicity,
        two_agl=is_two_agl(S),
        reduction_number_m=1 if regular else S.reduction_number_m(),
        canonical_index=canonical_index(S),
        min_mono_colength=canonical_family(S).min_colength,
        colength_bound=S.multiplicity - S.type + 1,
    )
    _validate(report)
    return report
