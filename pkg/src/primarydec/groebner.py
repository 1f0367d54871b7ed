"""Groebner bases for submodules of free modules over Q[x1..xn].

The engine keeps each vector as a tuple of terms (key, component, exponents,
coefficient) sorted by descending key, where keys are the additive tuples
produced by MonomialOrder.  Buchberger runs with the Gebauer-Moeller pair
update; the coprime criterion is applied only to pairs whose elements both
live entirely in one component, since it is unsound for general module
elements.  All higher operations (syzygies, lifts, kernels of induced maps,
intersections, quotients, saturation, elimination) reduce to Groebner runs
over suitably extended rings or orders.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from .polyring import (
    POSITION_OVER_TERM,
    TERM_OVER_POSITION,
    FreeElement,
    MonomialOrder,
    Polynomial,
    PolyMatrix,
    RingContext,
    RingError,
    Submodule,
    full_module,
    ideal,
    ideal_generators,
    unit_vector,
    zero_module,
)

# ---------------------------------------------------------------------------
# engine representation
# ---------------------------------------------------------------------------
# term: (key, comp, exps, coeff)
# elem: (terms, lead_key, lead_comp, lead_exps, lead_coeff, single_comp)


def _poly_from_items(ring: RingContext, items) -> Polynomial:
    key = ring.order.ring_key
    terms = [(e, c) for e, c in items if c]
    terms.sort(key=lambda t: key(t[0]), reverse=True)
    return Polynomial(ring, tuple(terms))


def _to_engine_terms(v: FreeElement, order: MonomialOrder):
    terms = []
    for comp, poly in enumerate(v.components):
        for exps, c in poly.terms:
            terms.append((order.term_key(comp, exps), comp, exps, c))
    terms.sort(reverse=True)
    return tuple(terms)


def _from_engine_terms(ring: RingContext, rank: int, terms) -> FreeElement:
    buckets: list[dict] = [dict() for _ in range(rank)]
    for _key, comp, exps, c in terms:
        buckets[comp][exps] = c
    return FreeElement(ring, tuple(_poly_from_items(ring, b.items()) for b in buckets))


def _make_elem(terms):
    lead = terms[0]
    comp = lead[1]
    single = comp if all(t[1] == comp for t in terms) else None
    return (terms, lead[0], comp, lead[2], lead[3], single)


def _primitive(terms):
    """Scale to integer coefficients with content 1 and positive lead."""
    denom = 1
    for _k, _c, _e, c in terms:
        denom = lcm(denom, c.denominator)
    nums = [c.numerator * (denom // c.denominator) for _k, _c, _e, c in terms]
    g = 0
    for v in nums:
        g = gcd(g, v)
    if nums[0] < 0:
        g = -g
    return tuple(
        (k, comp, exps, Fraction(n // g))
        for (k, comp, exps, _c), n in zip(terms, nums)
    )


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _reduce_full(terms, by_comp, order: MonomialOrder):
    """Tail-reduce a term tuple against the elements in by_comp."""
    if not terms:
        return ()
    coeffs: dict = {}
    heap = []
    for key, comp, exps, c in terms:
        spot = (comp, exps)
        prev = coeffs.get(spot)
        if prev is None:
            coeffs[spot] = c
            heapq.heappush(heap, (tuple(-x for x in key), comp, exps))
        else:
            coeffs[spot] = prev + c
    out = []
    while heap:
        negkey, comp, exps = heapq.heappop(heap)
        c = coeffs.pop((comp, exps), None)
        if not c:
            continue
        red = None
        for cand in by_comp.get(comp, ()):
            if _divides(cand[3], exps):
                red = cand
                break
        if red is None:
            out.append((tuple(-x for x in negkey), comp, exps, c))
            continue
        shift = tuple(a - b for a, b in zip(exps, red[3]))
        factor = c / red[4]
        addk = order.addend(shift)
        for tkey, tcomp, texps, tcoeff in red[0][1:]:
            nexps = tuple(a + b for a, b in zip(texps, shift))
            spot = (tcomp, nexps)
            prev = coeffs.get(spot)
            if prev is None:
                coeffs[spot] = -factor * tcoeff
                nkey = tuple(a + b for a, b in zip(tkey, addk))
                heapq.heappush(heap, (tuple(-x for x in nkey), tcomp, nexps))
            else:
                coeffs[spot] = prev - factor * tcoeff
    return tuple(out)


def _shift_terms(terms, shift, factor, order: MonomialOrder):
    addk = order.addend(shift)
    return [
        (
            tuple(a + b for a, b in zip(key, addk)),
            comp,
            tuple(a + b for a, b in zip(exps, shift)),
            c * factor,
        )
        for key, comp, exps, c in terms
    ]


def _spair(e1, e2, order: MonomialOrder):
    lead = tuple(max(a, b) for a, b in zip(e1[3], e2[3]))
    m1 = tuple(a - b for a, b in zip(lead, e1[3]))
    m2 = tuple(a - b for a, b in zip(lead, e2[3]))
    acc: dict = {}
    for key, comp, exps, c in _shift_terms(e1[0], m1, e2[4], order):
        acc[(comp, exps)] = (key, acc.get((comp, exps), (None, 0))[1] + c)
    for key, comp, exps, c in _shift_terms(e2[0], m2, e1[4], order):
        prev = acc.get((comp, exps))
        acc[(comp, exps)] = (key, (prev[1] if prev else 0) - c)
    terms = [
        (key, comp, exps, c) for (comp, exps), (key, c) in acc.items() if c
    ]
    terms.sort(reverse=True)
    return tuple(terms)


def _coprime_ok(e1, e2) -> bool:
    if e1[5] is None or e2[5] is None:
        return False
    return all(min(a, b) == 0 for a, b in zip(e1[3], e2[3]))


def _update_pairs(basis, by_comp, pair_set, heap, t, order: MonomialOrder):
    """Gebauer-Moeller pair update after appending basis[t]."""
    h = basis[t]
    hcomp, hexps = h[2], h[3]
    cand = [i for i in range(t) if basis[i][2] == hcomp]
    lcms = {i: tuple(max(a, b) for a, b in zip(basis[i][3], hexps)) for i in cand}
    coprime = {i: _coprime_ok(basis[i], h) for i in cand}
    keep = []
    rest = list(cand)
    while rest:
        i = rest.pop(0)
        li = lcms[i]
        if coprime[i] or (
            not any(_divides(lcms[j], li) and lcms[j] != li for j in rest)
            and not any(_divides(lcms[j], li) for j in keep)
        ):
            keep.append(i)
    for (i, j) in list(pair_set.keys()):
        if basis[i][2] != hcomp:
            continue
        lij = pair_set[(i, j)]
        if _divides(hexps, lij) and lcms[i] != lij and lcms[j] != lij:
            del pair_set[(i, j)]
    for i in keep:
        if coprime[i]:
            continue
        key = order.term_key(hcomp, lcms[i])
        pair_set[(i, t)] = lcms[i]
        heapq.heappush(heap, (key, i, t))


def _buchberger_engine(vectors, order: MonomialOrder):
    basis = []
    by_comp: dict = {}
    pair_set: dict = {}
    heap: list = []

    def add(terms):
        elem = _make_elem(_primitive(terms))
        basis.append(elem)
        by_comp.setdefault(elem[2], []).append(elem)
        _update_pairs(basis, by_comp, pair_set, heap, len(basis) - 1, order)

    for v in vectors:
        r = _reduce_full(v, by_comp, order)
        if r:
            add(r)
    while heap:
        _key, i, j = heapq.heappop(heap)
        if pair_set.pop((i, j), None) is None:
            continue
        s = _spair(basis[i], basis[j], order)
        if not s:
            continue
        r = _reduce_full(s, by_comp, order)
        if r:
            add(r)
    return basis


def _reduced_basis(basis, order: MonomialOrder):
    """Minimal leads, fully tail-reduced, monic, sorted by ascending lead key."""
    ordered = sorted(basis, key=lambda e: e[1])
    kept = []
    for e in ordered:
        if not any(k[2] == e[2] and _divides(k[3], e[3]) for k in kept):
            kept.append(e)
    final = []
    for idx, e in enumerate(kept):
        others: dict = {}
        for j, k in enumerate(kept):
            if j != idx:
                others.setdefault(k[2], []).append(k)
        r = _reduce_full(e[0], others, order)
        lc = r[0][3]
        monic = tuple((key, comp, exps, c / lc) for key, comp, exps, c in r)
        final.append(_make_elem(monic))
    final.sort(key=lambda e: e[1])
    return final


# ---------------------------------------------------------------------------
# public Groebner interface
# ---------------------------------------------------------------------------


class GroebnerBasis:
    """Reduced Groebner basis of a submodule; generators are monic and sorted."""

    def __init__(self, module: Submodule, elems):
        self.module = module
        self._elems = elems
        self._by_comp: dict = {}
        for e in elems:
            self._by_comp.setdefault(e[2], []).append(e)

    @property
    def ring(self) -> RingContext:
        return self.module.ring

    @property
    def ambient_rank(self) -> int:
        return self.module.ambient_rank

    @property
    def generators(self):
        return self.module.generators

    def leading_terms(self):
        return tuple((e[2], e[3]) for e in self._elems)

    def reduce_vector(self, v: FreeElement) -> FreeElement:
        if v.ring.variables != self.ring.variables or v.rank != self.ambient_rank:
            raise RingError("vector does not match basis ambient module")
        terms = _to_engine_terms(transport_vector(v, self.ring), self.ring.order)
        r = _reduce_full(terms, self._by_comp, self.ring.order)
        return _from_engine_terms(self.ring, self.ambient_rank, r)

    def contains(self, v: FreeElement) -> bool:
        return self.reduce_vector(v).is_zero()

    def is_full(self) -> bool:
        """Does the basis generate the whole ambient free module?"""
        zero = (0,) * self.ring.n
        hits = {comp for comp, exps in self.leading_terms() if exps == zero}
        return len(hits) == self.ambient_rank

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.module == other.module

    def __hash__(self):
        return hash(self.module)

    def __repr__(self):
        return f"GroebnerBasis({self.module!r})"


def transport_polynomial(p: Polynomial, ring: RingContext) -> Polynomial:
    if p.ring == ring:
        return p
    if p.ring.variables != ring.variables:
        raise RingError("cannot transport between different variable sets")
    return _poly_from_items(ring, p.terms)


def transport_vector(v: FreeElement, ring: RingContext) -> FreeElement:
    if v.ring == ring:
        return v
    return FreeElement(ring, tuple(transport_polynomial(p, ring) for p in v.components))


def transport_module(A: Submodule, ring: RingContext) -> Submodule:
    if A.ring == ring:
        return A
    return Submodule(ring, A.ambient_rank, [transport_vector(g, ring) for g in A.generators])


@lru_cache(maxsize=4096)
def _gb_cached(A: Submodule) -> GroebnerBasis:
    order = A.ring.order
    vectors = [
        _to_engine_terms(g, order) for g in A.generators if not g.is_zero()
    ]
    basis = _buchberger_engine(vectors, order)
    reduced = _reduced_basis(basis, order)
    gens = tuple(
        _from_engine_terms(A.ring, A.ambient_rank, e[0]) for e in reduced
    )
    return GroebnerBasis(Submodule(A.ring, A.ambient_rank, gens), reduced)


def buchberger(A: Submodule) -> GroebnerBasis:
    return _gb_cached(A)


def canonical(A: Submodule) -> Submodule:
    """Unique normal form of a submodule: its reduced Groebner generators."""
    return buchberger(A).module


def normal_form(v, G) -> Union[FreeElement, Polynomial]:
    if isinstance(G, Submodule):
        G = buchberger(G)
    if isinstance(v, Polynomial):
        r = G.reduce_vector(FreeElement(v.ring, (v,)))
        return r.components[0]
    return G.reduce_vector(v)


def is_member(v, G) -> bool:
    r = normal_form(v, G)
    return r.is_zero()


def is_sub(A: Submodule, B) -> bool:
    """Is every generator of A contained in B?"""
    if isinstance(B, Submodule):
        B = buchberger(B)
    return all(B.contains(transport_vector(g, B.ring)) for g in A.generators)


def module_equal(A: Submodule, B: Submodule) -> bool:
    return canonical(A) == canonical(transport_module(B, A.ring))


def is_unit_ideal(I: Submodule) -> bool:
    if I.ambient_rank != 1:
        raise RingError("not an ideal")
    return buchberger(I).is_full()


# ---------------------------------------------------------------------------
# syzygies and lifting
# ---------------------------------------------------------------------------


def _augmented_order(order: MonomialOrder) -> MonomialOrder:
    if order.module_extension == POSITION_OVER_TERM:
        return order
    return MonomialOrder(
        kind=order.kind,
        split_index=None,
        weights=order.weights,
        module_extension=POSITION_OVER_TERM,
        blocks=order.blocks,
    )


def _augmented_gb(A: Submodule):
    """GB of {[a_i; e_i]} with the original components dominating the tags."""
    ring = A.ring
    s, g = A.ambient_rank, len(A.generators)
    aug_ring = ring.with_order(_augmented_order(ring.order))
    zero = aug_ring.zero()
    gens = []
    for i, gen in enumerate(A.generators):
        comps = list(transport_vector(gen, aug_ring).components)
        tail = [zero] * g
        tail[i] = aug_ring.one()
        gens.append(FreeElement(aug_ring, tuple(comps + tail)))
    return buchberger(Submodule(aug_ring, s + g, gens)), aug_ring


def syzygies(A: Submodule) -> Submodule:
    """Relations among the given generators of A, as a submodule of R^g."""
    ring = A.ring
    s, g = A.ambient_rank, len(A.generators)
    if g == 0:
        return zero_module(ring, 0)
    gb, aug_ring = _augmented_gb(A)
    out = []
    for e in gb._elems:
        if e[2] >= s:
            vec = _from_engine_terms(aug_ring, s + g, e[0])
            assert all(p.is_zero() for p in vec.components[:s])
            out.append(
                transport_vector(FreeElement(aug_ring, vec.components[s:]), ring)
            )
    return Submodule(ring, g, out)


def lift(A: Submodule, B: Submodule) -> PolyMatrix:
    """Matrix T with (gens of A as columns) * T = (gens of B as columns).

    Raises ValueError when some generator of B is not in A.
    """
    ring = A.ring
    s, g = A.ambient_rank, len(A.generators)
    if B.ambient_rank != s:
        raise RingError("rank mismatch in lift")
    gb, aug_ring = _augmented_gb(A)
    top_by_comp: dict = {}
    for e in gb._elems:
        if e[2] < s:
            top_by_comp.setdefault(e[2], []).append(e)
    cols = []
    zero = aug_ring.zero()
    for b in B.generators:
        aug = FreeElement(
            aug_ring,
            tuple(transport_vector(b, aug_ring).components) + (zero,) * g,
        )
        terms = _to_engine_terms(aug, aug_ring.order)
        r = _reduce_full(terms, top_by_comp, aug_ring.order)
        vec = _from_engine_terms(aug_ring, s + g, r)
        if not all(p.is_zero() for p in vec.components[:s]):
            raise ValueError("lift does not exist: vector outside the module")
        cols.append(
            transport_vector(
                FreeElement(aug_ring, tuple(-p for p in vec.components[s:])), ring
            )
        )
    return PolyMatrix(ring, g, cols)


def _as_matrix(X) -> PolyMatrix:
    if isinstance(X, PolyMatrix):
        return X
    return PolyMatrix.from_submodule(X)


def modulo_kernel(A, B) -> Submodule:
    """Preimage {x : A x in im B} for matrices A, B with equal row count."""
    A = _as_matrix(A)
    B = _as_matrix(B)
    if A.nrows != B.nrows:
        raise RingError("row mismatch in modulo_kernel")
    ring = A.ring
    na = A.ncols
    combined = Submodule(ring, A.nrows, A.columns + B.columns)
    S = syzygies(combined)
    out = []
    for rel in S.generators:
        head = FreeElement(ring, rel.components[:na])
        if not head.is_zero():
            out.append(head)
    return Submodule(ring, na, out)


def reduce_columns(A, G) -> Submodule:
    """Normal form of each column of A against G, dropping columns that vanish."""
    A = _as_matrix(A)
    if isinstance(G, Submodule):
        G = buchberger(G)
    out = []
    for col in A.columns:
        r = normal_form(col, G)
        if not r.is_zero():
            out.append(r)
    return Submodule(A.ring, A.nrows, out)


# ---------------------------------------------------------------------------
# intersections, quotients, saturation, elimination
# ---------------------------------------------------------------------------


def _extend_vector(v: FreeElement, ext: RingContext) -> FreeElement:
    comps = []
    for p in v.components:
        comps.append(
            _poly_from_items(ext, (((0,) + e, c) for e, c in p.terms))
        )
    return FreeElement(ext, tuple(comps))


def _contract_vector(v: FreeElement, ring: RingContext) -> FreeElement:
    comps = []
    for p in v.components:
        assert all(e[0] == 0 for e, _c in p.terms)
        comps.append(_poly_from_items(ring, ((e[1:], c) for e, c in p.terms)))
    return FreeElement(ring, tuple(comps))


def intersect(A: Submodule, B: Submodule) -> Submodule:
    """A cap B via one auxiliary variable that weights the two copies."""
    ring = A.ring
    if B.ring != ring or B.ambient_rank != A.ambient_rank:
        raise RingError("operands live in different modules")
    s = A.ambient_rank
    if not A.generators or not B.generators:
        return zero_module(ring, s)
    ext = RingContext(
        ("@t",) + ring.variables,
        MonomialOrder(
            kind="block", blocks=((0,),), module_extension=TERM_OVER_POSITION
        ),
    )
    t = ext.variable(0)
    one = ext.one()
    gens = []
    for a in A.generators:
        gens.append(_extend_vector(a, ext).scale(t))
    for b in B.generators:
        gens.append(_extend_vector(b, ext).scale(one - t))
    gb = buchberger(Submodule(ext, s, gens))
    out = []
    for gen in gb.generators:
        if all(all(e[0] == 0 for e, _c in p.terms) for p in gen.components):
            out.append(_contract_vector(gen, ring))
    return Submodule(ring, s, out)


def intersect_many(mods: Sequence[Submodule]) -> Submodule:
    mods = list(mods)
    if not mods:
        raise ValueError("nothing to intersect")
    acc = mods[0]
    for m in mods[1:]:
        acc = intersect(acc, m)
    return acc


def quotient(A: Submodule, B: Submodule) -> Submodule:
    """Ideal {f : f * B inside A} for submodules of the same free module."""
    ring = A.ring
    if B.ambient_rank != A.ambient_rank:
        raise RingError("operands live in different modules")
    result = None
    Amat = PolyMatrix.from_submodule(A)
    for b in B.generators:
        if b.is_zero():
            continue
        I_b = modulo_kernel(PolyMatrix(ring, A.ambient_rank, [b]), Amat)
        result = I_b if result is None else intersect(result, I_b)
    if result is None:
        return ideal(ring, [ring.one()])
    return result


def annihilator(A: Submodule) -> Submodule:
    """Ideal of ring elements that multiply the whole ambient module into A."""
    return quotient(A, full_module(A.ring, A.ambient_rank))


def quotient_by_ideal(A: Submodule, J: Submodule) -> Submodule:
    """Submodule {v : J v inside A}."""
    ring = A.ring
    s = A.ambient_rank
    Amat = PolyMatrix.from_submodule(A)
    result = None
    for f in ideal_generators(J):
        if f.is_zero():
            continue
        scaled = PolyMatrix(
            ring, s, [unit_vector(ring, s, i).scale(f) for i in range(s)]
        )
        step = modulo_kernel(scaled, Amat)
        result = step if result is None else intersect(result, step)
    if result is None:
        return full_module(ring, s)
    return result


def saturate(A: Submodule, J: Submodule) -> tuple[Submodule, int]:
    """Stable value of repeated quotients by J, with the step count needed."""
    prev = canonical(A)
    k = 0
    while True:
        nxt = canonical(quotient_by_ideal(prev, J))
        if nxt == prev:
            return prev, k
        prev = nxt
        k += 1


def eliminate(A: Submodule, drop: Iterable[int]) -> Submodule:
    """Generators of the elements of A free of the dropped variables."""
    ring = A.ring
    drop = tuple(sorted(set(drop)))
    if not drop:
        return canonical(A)
    if any(i < 0 or i >= ring.n for i in drop):
        raise ValueError("variable index out of range")
    block_ring = ring.with_order(
        MonomialOrder(
            kind="block", blocks=(drop,), module_extension=TERM_OVER_POSITION
        )
    )
    gb = buchberger(transport_module(A, block_ring))
    out = []
    for gen in gb.generators:
        if all(
            all(all(e[i] == 0 for i in drop) for e, _c in p.terms)
            for p in gen.components
        ):
            out.append(transport_vector(gen, ring))
    return Submodule(ring, A.ambient_rank, out)


# ---------------------------------------------------------------------------
# dimension
# ---------------------------------------------------------------------------


def _support_masks(leads, comp: int) -> list[int]:
    masks = []
    for c, exps in leads:
        if c != comp:
            continue
        m = 0
        for i, e in enumerate(exps):
            if e:
                m |= 1 << i
        masks.append(m)
    return masks


def _monomial_dim(masks: list[int], n: int) -> int:
    if any(m == 0 for m in masks):
        return -1
    for size in range(n, -1, -1):
        for combo in combinations(range(n), size):
            sel = 0
            for i in combo:
                sel |= 1 << i
            if all(m & ~sel for m in masks):
                return size
    return -1


def krull_dim(X) -> int:
    """Dimension of F/X for a submodule X of the free module F."""
    G = X if isinstance(X, GroebnerBasis) else buchberger(X)
    n = G.ring.n
    if G.ambient_rank == 0:
        return -1
    leads = G.leading_terms()
    present = {c for c, _e in leads}
    best = -1
    for comp in range(G.ambient_rank):
        if comp not in present:
            return n
        best = max(best, _monomial_dim(_support_masks(leads, comp), n))
    return best


def codim(X) -> int:
    G = X if isinstance(X, GroebnerBasis) else buchberger(X)
    return G.ring.n - krull_dim(G)


def independent_sets(X) -> list[tuple[int, ...]]:
    """All maximum-size variable sets not meeting any leading support."""
    G = X if isinstance(X, GroebnerBasis) else buchberger(X)
    if G.ambient_rank != 1:
        raise RingError("independent sets are defined for ideals")
    n = G.ring.n
    masks = _support_masks(G.leading_terms(), 0)
    if any(m == 0 for m in masks):
        return []
    for size in range(n, -1, -1):
        found = []
        for combo in combinations(range(n), size):
            sel = 0
            for i in combo:
                sel |= 1 << i
            if all(m & ~sel for m in masks):
                found.append(combo)
        if found:
            return found
    return []
