"""Homeomorphisms along the chain, chain multiplication, incomparability.

Order automorphisms extended over the bottom point give homeomorphisms
between chain topologies; the image formulas send each ray to the ray at
the extended cut.  Finite-support permutations of the space multiply the
chain: distinct permutations-up-to-automorphism give pairwise
incomparable copies of the whole chain, which this module certifies with
explicit witness opens.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .completion import (
    LEX_ZZ,
    CutPoint,
    ExtendedAutomorphism,
    SurdGap,
    cmp_cut,
    cut_leq,
    cut_lt,
    extend_automorphism,
    is_gap,
    point_cut,
)
from .errors import OrderMismatch, SearchExhausted, UnsupportedOrder
from .orders import (
    Automorphism,
    Cmp,
    Elem,
    Identity,
    LexMap,
    OrderExpr,
    Q,
    RationalOrder,
    Shift,
    Translate,
    PiecewiseLinear,
    Z,
    _cmp_value,
    automorphism_moving,
    element_between,
    successor,
)
from .topology import (
    EMPTY,
    FULL,
    LEFT_RAY,
    BasicOpen,
    Point,
    RayTopology,
    TopDescriptor,
    at,
    bottom,
    in_topology,
    left_ray,
    mem,
    punctured_ray,
    ray_topology,
)

# ---------------------------------------------------------------------------
# Homeomorphisms from automorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomeoMap:
    """A chain homeomorphism: an order automorphism with the bottom fixed.

    ``target`` must be the extension image of ``source``; the image
    formulas send [z,a) to [z,F(a)) and (z,b) to (z,F(b)).  A nonstandard
    ``bottom_image`` models tampered maps for negative testing.
    """

    automorphism: Automorphism
    source: CutPoint
    target: CutPoint
    extension: ExtendedAutomorphism
    bottom_image: Optional[Point] = None

    @property
    def order(self) -> OrderExpr:
        return self.automorphism.order

    def apply_point(self, p: Point) -> Point:
        if p.is_bottom:
            return self.bottom_image if self.bottom_image is not None else bottom(self.order)
        return Point(self.order, self.automorphism.apply(p.value))

    def inverse(self) -> "HomeoMap":
        return HomeoMap(self.automorphism.inverse(), self.target, self.source,
                        self.extension.inverse())


def homeo_from_automorphism(phi: Automorphism, x1: Elem) -> HomeoMap:
    """The homeomorphism from the topology at x1 to the one at phi(x1)."""
    if x1.order != phi.order:
        raise OrderMismatch("base element over a different order")
    ext = extend_automorphism(phi)
    source = point_cut(phi.order, x1)
    return HomeoMap(phi, source, ext.apply_cut(source), ext)


def image_of_open(h: HomeoMap, open_set: BasicOpen) -> BasicOpen:
    if open_set.order != h.order:
        raise OrderMismatch("open set over a different order")
    if open_set.kind in (EMPTY, FULL):
        return open_set
    mapped = h.extension.apply_cut(open_set.cut)
    return BasicOpen(open_set.order, open_set.kind, mapped)


def preimage_of_open(h: HomeoMap, open_set: BasicOpen) -> BasicOpen:
    return image_of_open(h.inverse(), open_set)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    samples: int = 0


@dataclass
class HomeoReport:
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "", samples: int = 0) -> None:
        self.checks.append(CheckResult(name, passed, detail, samples))


def verify_homeo(h: HomeoMap, budget: int = 1000, seed: int = 0) -> HomeoReport:
    """Sampled soundness check of a claimed chain homeomorphism.

    Checks: the bottom point is fixed; the target is the extension image
    of the source; images of source-topology rays land in the target
    topology and preimages come back; membership conjugates through the
    map; and the punctured trace below the source maps into the trace
    below the target.
    """
    from . import sampling

    rng = sampling.make_rng(seed)
    order = h.order
    report = HomeoReport()

    bottom_ok = h.bottom_image is None or h.bottom_image.is_bottom
    report.add("bottom_fixed", bottom_ok,
               "" if bottom_ok else "map does not fix the bottom point")

    try:
        target_ok = cmp_cut(h.extension.apply_cut(h.source), h.target) == Cmp.EQUAL
    except UnsupportedOrder:
        target_ok = False
    report.add("target_matches_extension", target_ok,
               "" if target_ok else "target cut is not the extension image of the source")

    src_top = RayTopology(h.source)
    tgt_top = RayTopology(h.target)
    inv = h.inverse()

    n_ray = max(1, budget // 4)
    ok, bad = True, ""
    for _ in range(n_ray):
        a = sampling.sample_cut(order, rng)
        image = image_of_open(h, left_ray(a))
        back = preimage_of_open(h, image)
        if image.kind != LEFT_RAY or cmp_cut(back.cut, a) != Cmp.EQUAL:
            ok, bad = False, f"left ray at {sampling.describe_cut(a)} fails round trip"
            break
    report.add("left_ray_images", ok, bad, n_ray)

    ok, bad = True, ""
    for _ in range(n_ray):
        b = sampling.sample_cut_at_most(order, h.source, rng)
        image = image_of_open(h, punctured_ray(b))
        if not in_topology(image, tgt_top):
            ok, bad = False, f"image of punctured ray at {sampling.describe_cut(b)} escapes the target topology"
            break
        b2 = sampling.sample_cut_at_most(order, h.target, rng)
        pre = preimage_of_open(h, punctured_ray(b2))
        if not in_topology(pre, src_top):
            ok, bad = False, f"preimage of punctured ray at {sampling.describe_cut(b2)} escapes the source topology"
            break
    report.add("punctured_images", ok, bad, n_ray)

    ok, bad = True, ""
    for _ in range(n_ray):
        pt = bottom(order) if rng.random() < 0.1 else Point(order, sampling.sample_elem(order, rng))
        cut = sampling.sample_cut(order, rng)
        open_set = left_ray(cut) if rng.random() < 0.5 else punctured_ray(cut)
        if mem(pt, open_set) != mem(h.apply_point(pt), image_of_open(h, open_set)):
            ok, bad = False, "membership fails to conjugate through the map"
            break
    report.add("membership_conjugation", ok, bad, n_ray)

    ok, bad = True, ""
    for _ in range(n_ray):
        x = sampling.sample_cut_below(order, h.source, rng)
        fx = h.extension.apply_cut(x)
        if not cut_lt(fx, h.target):
            ok, bad = False, "trace below the source leaks past the target"
            break
    report.add("trace", ok, bad, n_ray)
    return report


# ---------------------------------------------------------------------------
# Finite-support permutations and perturbed opens
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FinitePerm:
    """A finite-support permutation of the order elements; bottom fixed."""

    order: OrderExpr
    mapping: tuple  # sorted tuple of (value, image value), fixed points dropped

    def __post_init__(self):
        from .orders import _canon_value

        pairs = {(_canon_value(self.order, k)): _canon_value(self.order, v)
                 for k, v in dict(self.mapping).items()}
        pairs = {k: v for k, v in pairs.items() if k != v}
        if sorted(map(repr, pairs.keys())) != sorted(map(repr, pairs.values())):
            raise ValueError("mapping is not a permutation of its support")
        object.__setattr__(self, "mapping", tuple(sorted(pairs.items(), key=repr)))

    @property
    def support(self) -> tuple:
        return tuple(k for k, _ in self.mapping)

    def as_dict(self) -> Dict:
        return dict(self.mapping)

    def apply_value(self, v):
        for k, img in self.mapping:
            if k == v:
                return img
        return v

    def inverse(self) -> "FinitePerm":
        return FinitePerm(self.order, tuple((v, k) for k, v in self.mapping))

    @property
    def is_identity(self) -> bool:
        return not self.mapping


def identity_perm(order: OrderExpr) -> FinitePerm:
    return FinitePerm(order, ())


def swap_perm(order: OrderExpr, a, b) -> FinitePerm:
    return FinitePerm(order, ((a, b), (b, a)))


def compose_perm(p: FinitePerm, q: FinitePerm) -> FinitePerm:
    """The permutation x -> p(q(x))."""
    if p.order != q.order:
        raise OrderMismatch("permutations over different orders")
    domain = set(p.support) | set(q.support)
    return FinitePerm(p.order, tuple((v, p.apply_value(q.apply_value(v))) for v in domain))


@dataclass(frozen=True, eq=False)
class PerturbedOpen:
    """A basic open adjusted by finitely many added/removed points.

    Canonical form: added points lie outside the base ray, removed points
    inside, and boundary adds/removes that merely slide the ray's cut
    (possible over orders with successors) are absorbed into the cut.  A
    canonical perturbation with nonempty adjustments is therefore never
    extensionally equal to any basic open.
    """

    base: BasicOpen
    added: tuple = ()
    removed: tuple = ()

    def __post_init__(self):
        base, added, removed = _normalize_perturbed(self.base, self.added, self.removed)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "added", added)
        object.__setattr__(self, "removed", removed)

    @property
    def order(self) -> OrderExpr:
        return self.base.order

    @property
    def is_pure(self) -> bool:
        return not self.added and not self.removed

    def as_basic(self) -> BasicOpen:
        if not self.is_pure:
            raise ValueError("perturbed open with nonempty adjustments")
        return self.base

    def contains_value(self, v) -> bool:
        if any(v == a for a in self.added):
            return True
        if any(v == r for r in self.removed):
            return False
        return mem(Point(self.order, Elem(self.order, v)), self.base)

    def contains(self, p: Point) -> bool:
        if p.is_bottom:
            return mem(p, self.base)
        return self.contains_value(p.value.value)


def _sorted_values(order: OrderExpr, values) -> tuple:
    vals = list(values)
    vals.sort(key=lambda v: _OrderKey(order, v))
    return tuple(vals)


class _OrderKey:
    def __init__(self, order, value):
        self.order, self.value = order, value

    def __lt__(self, other):
        return _cmp_value(self.order, self.value, other.value) < 0


def _normalize_perturbed(base: BasicOpen, added, removed) -> Tuple[BasicOpen, tuple, tuple]:
    order = base.order
    added = {v for v in added}
    removed = {v for v in removed}
    both = {a for a in added if any(a == r for r in removed)}
    added -= both
    removed -= both
    # keep only genuinely adjusting points
    added = {v for v in added if not mem(Point(order, Elem(order, v)), base)}
    removed = {v for v in removed if mem(Point(order, Elem(order, v)), base)}
    if base.kind in (EMPTY, FULL):
        # a perturbed empty/full set is not ray-shaped; leave as-is
        return base, _sorted_values(order, added), _sorted_values(order, removed)
    changed = True
    while changed and (added or removed):
        changed = False
        cut = base.cut
        # absorb an added point sitting exactly at the cut (ray grows by one)
        for a in list(added):
            if cmp_cut(point_cut(order, Elem(order, a)), cut) == Cmp.EQUAL:
                nxt = successor(order, Elem(order, a))
                if nxt is None:
                    continue  # dense order: [z, a] is not a ray
                base = BasicOpen(order, base.kind, point_cut(order, nxt))
                added.discard(a)
                changed = True
                break
        if changed:
            continue
        # absorb a removed point that is the top element of the ray
        for r in list(removed):
            nxt = successor(order, Elem(order, r))
            if nxt is None:
                continue
            if cut_leq(base.cut, point_cut(order, nxt)):
                base = BasicOpen(order, base.kind, point_cut(order, Elem(order, r)))
                removed.discard(r)
                changed = True
                break
    return base, _sorted_values(order, added), _sorted_values(order, removed)


def perm_image_open(p: FinitePerm, open_set: BasicOpen) -> PerturbedOpen:
    """The pointwise image p[O] of a basic open, in canonical perturbed form."""
    if p.order != open_set.order:
        raise OrderMismatch("permutation over a different order")
    order = p.order
    p_inv = p.inverse()
    added, removed = [], []
    for v in p.support:
        v_in = mem(Point(order, Elem(order, v)), open_set)
        img = p.apply_value(v)
        img_in = mem(Point(order, Elem(order, img)), open_set)
        if v_in and not img_in:
            added.append(img)
        if v_in and not mem(Point(order, Elem(order, p_inv.apply_value(v))), open_set):
            removed.append(v)
    return PerturbedOpen(open_set, tuple(added), tuple(removed))


def perm_image_perturbed(p: FinitePerm, po: PerturbedOpen) -> PerturbedOpen:
    """p[S] for a perturbed open S; differs from the base on a finite set."""
    if p.order != po.order:
        raise OrderMismatch("permutation over a different order")
    order = p.order
    p_inv = p.inverse()
    domain = set(p.support) | set(po.added) | set(po.removed)
    domain |= {p.apply_value(v) for v in domain}
    added, removed = [], []
    for v in domain:
        in_image = po.contains_value(p_inv.apply_value(v))
        in_base = mem(Point(order, Elem(order, v)), po.base)
        if in_image and not in_base:
            added.append(v)
        if in_base and not in_image:
            removed.append(v)
    return PerturbedOpen(po.base, tuple(added), tuple(removed))


@dataclass(frozen=True)
class PermutedTopology(TopDescriptor):
    """The image of a chain topology under a finite-support permutation."""

    perm: FinitePerm
    base: TopDescriptor

    @property
    def order(self) -> OrderExpr:
        return self.base.order


def open_in(open_set, top: TopDescriptor) -> bool:
    """Membership in a topology; accepts basic and perturbed opens."""
    if isinstance(top, PermutedTopology):
        po = open_set if isinstance(open_set, PerturbedOpen) else PerturbedOpen(open_set)
        pulled = perm_image_perturbed(top.perm.inverse(), po)
        if not pulled.is_pure:
            return False
        return open_in(pulled.as_basic(), top.base)
    if isinstance(open_set, PerturbedOpen):
        return open_set.is_pure and in_topology(open_set.as_basic(), top)
    return in_topology(open_set, top)


# ---------------------------------------------------------------------------
# Chains and their multiplication
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainDescriptor:
    """The chain of permuted topologies {p[tau_x] : x in the parameter set}."""

    perm: FinitePerm
    parameter_set: str = "L"  # "L", "completion", or a class label


def chains_equal(p: FinitePerm, q: FinitePerm) -> bool:
    """Do p and q produce the same chain of permuted topologies?

    Holds iff q^-1 o p is an order automorphism of the space; for
    finite-support permutations that means the identity.
    """
    if p.order != q.order:
        raise OrderMismatch("permutations over different orders")
    q_inv = q.inverse()
    for v in set(p.support) | set(q.support):
        if q_inv.apply_value(p.apply_value(v)) != v:
            return False
    return True


def _candidate_cuts(p: FinitePerm, q: FinitePerm) -> List[CutPoint]:
    """Cuts straddling the disagreement points of q^-1 o p.

    Cuts derived from p's own support come first, so the search favours
    separators local to the permutation whose image is the witness.
    """
    order = p.order
    r = compose_perm(q.inverse(), p)
    own, other = [], []
    for v in r.support:
        w = r.apply_value(v)
        lo, hi = (v, w) if _cmp_value(order, v, w) < 0 else (w, v)
        bucket = own if any(s == v for s in p.support) else other
        bucket.append(point_cut(order, Elem(order, hi)))
        between = element_between(order, Elem(order, lo), Elem(order, hi))
        if between is not None:
            bucket.append(point_cut(order, between))
        nxt = successor(order, Elem(order, hi))
        if nxt is not None:
            bucket.append(point_cut(order, nxt))
    return own + other


def incomparable_witness(p: FinitePerm, x: Elem, q: FinitePerm, y: Elem):
    """Witness opens separating the chains of p and q at positions x, y.

    Returns (O1, O2) with O1 in p[tau_x] but not q[tau_y], and O2 in
    q[tau_y] but not p[tau_x].
    """
    if chains_equal(p, q):
        raise ValueError("chains coincide; no incomparability witness exists")

    def search(a: FinitePerm, xa: Elem, b: FinitePerm, yb: Elem) -> PerturbedOpen:
        order = a.order
        target = PermutedTopology(b, ray_topology(point_cut(order, yb)))
        for cut in _candidate_cuts(a, b):
            candidates = [left_ray(cut)]
            if cut_leq(cut, point_cut(order, xa)):
                candidates.append(punctured_ray(cut))
            for open_set in candidates:
                image = perm_image_open(a, open_set)
                if not open_in(image, target):
                    return image
        raise SearchExhausted(
            "no separating open found near the permutation supports"
        )

    return search(p, x, q, y), search(q, y, p, x)


def count_distinct_chains(k: int, order: OrderExpr = Q) -> int:
    """Number of distinct chains over all 2^k pair-swap permutations.

    Uses k disjoint element pairs; each on/off choice of swaps yields a
    permutation, and the count of pairwise-distinct chains must be 2^k.
    """
    if not (0 <= k <= 20):
        raise ValueError("pair count capped at 20")
    pairs = [(Fraction(2 * i), Fraction(2 * i + 1)) if isinstance(order, RationalOrder)
             else (2 * i, 2 * i + 1) for i in range(k)]
    perms = []
    for mask in range(1 << k):
        mapping = []
        for i, (a, b) in enumerate(pairs):
            if mask >> i & 1:
                mapping.extend([(a, b), (b, a)])
        perms.append(FinitePerm(order, tuple(mapping)))
    # equal chains force equal mappings (the support comparison in
    # chains_equal), so sorting by mapping puts equal chains side by side
    # and a linear chains_equal sweep certifies the distinct count
    perms.sort(key=lambda f: repr(f.mapping))
    count = 0
    previous = None
    for perm in perms:
        if previous is None or not chains_equal(perm, previous):
            count += 1
        previous = perm
    return count


# ---------------------------------------------------------------------------
# Homeomorphism classes along one chain
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GapTraceObstruction:
    """Why a gap topology is not homeomorphic to an element topology.

    At a gap the punctured trace up to the cut is already the open trace
    strictly below it (no order element sits at the gap), while at an
    element the two differ by that element; a homeomorphism would have to
    carry one situation onto the other.
    """

    gap: CutPoint
    element: CutPoint

    def validate(self, samples: int = 1000, seed: int = 0) -> bool:
        from . import sampling

        rng = sampling.make_rng(seed)
        order = self.gap.order
        for _ in range(samples):
            x = sampling.sample_elem(order, rng)
            xc = point_cut(order, x)
            if cmp_cut(xc, self.gap) == Cmp.EQUAL:
                return False  # the gap would be an order element
            # closed and open traces at the gap agree on every sample
            if cut_leq(xc, self.gap) != cut_lt(xc, self.gap):
                return False
        # while at the element cut they differ, at the element itself
        elem_cut = self.element
        return cut_leq(elem_cut, elem_cut) and not cut_lt(elem_cut, elem_cut)


@dataclass(frozen=True)
class ChainClassAnswer:
    verdict: str  # "yes", "no", or "unknown"
    homeo: Optional[HomeoMap] = None
    obstruction: Optional[GapTraceObstruction] = None


def _surd_affine_between(g0: SurdGap, g1: SurdGap) -> Optional[Automorphism]:
    """An increasing affine map of Q sending the cut of g0 to the cut of g1."""
    if g0.r != g1.r:
        return None
    b0 = Fraction(g0.q, g0.s)
    b1 = Fraction(g1.q, g1.s)
    slope = b1 / b0
    if slope <= 0:
        return None
    icept = Fraction(g1.p, g1.s) - slope * Fraction(g0.p, g0.s)
    if slope == 1:
        return Translate(icept) if icept != 0 else Identity(Q)
    return PiecewiseLinear((), ((slope, icept),))


def homeo_between_gaps(c0: CutPoint, c1: CutPoint) -> HomeoMap:
    """A homeomorphism between two gap topologies of a supported order."""
    if c0.order != c1.order:
        raise OrderMismatch("gaps over different orders")
    if not (is_gap(c0) and is_gap(c1)):
        raise UnsupportedOrder("both cuts must be gaps")
    order = c0.order
    if order == LEX_ZZ:
        delta = c1.gap.index - c0.gap.index
        aut = LexMap(order, Shift(delta), (), Identity(Z)) if delta else Identity(order)
    elif isinstance(order, RationalOrder):
        aut = _surd_affine_between(c0.gap, c1.gap)
        if aut is None:
            raise UnsupportedOrder(
                "no affine automorphism relates these surd cuts"
            )
    else:
        raise UnsupportedOrder(f"no gap-homogeneity witness for {order!r}")
    ext = extend_automorphism(aut)
    mapped = ext.apply_cut(c0)
    if cmp_cut(mapped, c1) != Cmp.EQUAL:
        raise UnsupportedOrder("constructed automorphism misses the target gap")
    return HomeoMap(aut, c0, c1, ext)


def same_chain_class(c1: CutPoint, c2: CutPoint) -> ChainClassAnswer:
    """Are the topologies at two cuts homeomorphic along the chain?

    Element/element pairs come from homogeneity; element/gap pairs are
    never homeomorphic (trace obstruction); gap/gap pairs are resolved
    when the order's gap suborder has its own homogeneity witness whose
    maps extend, and left unknown otherwise.
    """
    if c1.order != c2.order:
        raise OrderMismatch("cut points over different orders")
    if not is_gap(c1) and not is_gap(c2):
        phi = automorphism_moving(c1.order, c1.element, c2.element)
        return ChainClassAnswer("yes", homeo=homeo_from_automorphism(phi, c1.element))
    if is_gap(c1) != is_gap(c2):
        gap, elem_cut = (c1, c2) if is_gap(c1) else (c2, c1)
        return ChainClassAnswer("no", obstruction=GapTraceObstruction(gap, elem_cut))
    try:
        return ChainClassAnswer("yes", homeo=homeo_between_gaps(c1, c2))
    except UnsupportedOrder:
        return ChainClassAnswer("unknown")
