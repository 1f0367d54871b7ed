"""Associated primes and primary decomposition of submodules of free modules.

Minimal primes of an ideal are found by splitting along a maximal independent
set of variables: after saturating by the product of leading coefficients the
ideal becomes zero dimensional over the rational function field in the
independent variables, where shape certification plus rational univariate
factorization settle primality.  The module-level decomposition peels one
primary component per associated prime, using twice-iterated Ext kernels for
the equidimensional parts and ideal-power witnesses for the multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .groebner import (
    annihilator,
    buchberger,
    canonical,
    codim,
    eliminate,
    independent_sets,
    intersect,
    intersect_many,
    is_sub,
    is_unit_ideal,
    krull_dim,
    module_equal,
    saturate,
    transport_module,
    transport_polynomial,
)
from .homology import ass_prim_codim, equidim_hull, ext_module
from .polyring import (
    MonomialOrder,
    Polynomial,
    RingContext,
    Submodule,
    full_module,
    ideal,
    ideal_generators,
    render_polynomial,
    substitute,
)
from .unifactor import univariate_factor


class DecompositionError(RuntimeError):
    """Raised when no certified decomposition could be produced."""


class _CertificationFailure(Exception):
    """Internal signal: the chosen independent set did not certify."""


_MAX_DEPTH = 48
_SHEAR_LAMBDAS = (1, -1, 2, -2, 3, -3, 5, -5)
_MAX_SHEARS = 12


def _render_key(A: Submodule) -> tuple:
    return tuple(
        tuple(render_polynomial(p) for p in g.components)
        for g in canonical(A).generators
    )


def _unit_ideal(ring: RingContext) -> Submodule:
    return canonical(ideal(ring, [ring.one()]))


def _ideal_sum(I: Submodule, polys) -> Submodule:
    return ideal(I.ring, list(ideal_generators(I)) + list(polys))


def _module_sum(A: Submodule, B: Submodule) -> Submodule:
    return Submodule(A.ring, A.ambient_rank, list(A.generators) + list(B.generators))


def _ideal_times_module(P: Submodule, X: Submodule) -> Submodule:
    gens = []
    for f in ideal_generators(P):
        for v in X.generators:
            gens.append(v.scale(f))
    return Submodule(X.ring, X.ambient_rank, gens)


def _minimalize(primes) -> tuple[Submodule, ...]:
    unique: dict[Submodule, None] = {}
    for P in primes:
        unique.setdefault(canonical(P), None)
    kept = []
    items = list(unique)
    for P in items:
        if any(Q != P and is_sub(Q, P) for Q in items):
            continue
        kept.append(P)
    kept.sort(key=lambda P: (codim(P), _render_key(P)))
    return tuple(kept)


# ---------------------------------------------------------------------------
# minimal associated primes
# ---------------------------------------------------------------------------


def _field_lead_coefficient(p: Polynomial, D: tuple[int, ...]) -> Polynomial:
    """Coefficient in the independent variables of the top D-monomial of p."""
    ring = p.ring
    lead = p.leading_monomial()
    dpart = tuple(lead[i] if i in D else 0 for i in range(ring.n))
    c = ring.zero()
    for exps, coeff in p.terms:
        if tuple(exps[i] if i in D else 0 for i in range(ring.n)) != dpart:
            continue
        upart = tuple(0 if i in D else exps[i] for i in range(ring.n))
        c = c + ring.monomial(upart) * coeff
    return c * (1 / c.leading_coefficient())


def _poly_in_var(ring: RingContext, d: int, coeffs) -> Polynomial:
    p = ring.zero()
    for k, c in enumerate(coeffs):
        if c:
            exps = tuple(k if i == d else 0 for i in range(ring.n))
            p = p + ring.monomial(exps) * c
    return p


def _minpoly_data(J: Submodule, D: tuple[int, ...], d: int):
    """Least-degree elimination polynomial for x_d, with its content stripped.

    Returns (degree, coefficients of the rational-coefficient minimal
    polynomial low to high, or None when the content is genuinely dependent
    on the independent variables).
    """
    ring = J.ring
    others = tuple(i for i in D if i != d)
    blocks = (others, (d,)) if others else ((d,),)
    bring = ring.with_order(MonomialOrder(kind="block", blocks=blocks))
    G = buchberger(transport_module(J, bring))
    best = None
    for gen in G.generators:
        p = gen.components[0]
        lead = p.leading_monomial()
        if any(lead[i] for i in others):
            continue
        degd = lead[d]
        if best is None or degd < best.leading_monomial()[d]:
            best = p
    if best is None or best.leading_monomial()[d] == 0:
        raise _CertificationFailure("no elimination polynomial found")
    ck: dict[int, Polynomial] = {}
    for exps, coeff in best.terms:
        k = exps[d]
        upart = tuple(0 if i == d else exps[i] for i in range(bring.n))
        ck[k] = ck.get(k, bring.zero()) + bring.monomial(upart) * coeff
    top = max(ck)
    ctop = ck[top]
    coeffs = []
    for k in range(top + 1):
        c = ck.get(k)
        if c is None or c.is_zero():
            coeffs.append(0)
            continue
        lam = c.leading_coefficient() / ctop.leading_coefficient()
        if c != ctop * lam:
            return top, None
        coeffs.append(lam)
    return top, tuple(coeffs)


def _shape_exponent(J: Submodule, D: tuple[int, ...], d_last: int):
    """Exponent k when the lead terms have shape {x_d : d != d_last, x_last^k}."""
    ring = J.ring
    perm = tuple(d for d in D if d != d_last) + (d_last,)
    blocks = tuple((d,) for d in perm)
    bring = ring.with_order(MonomialOrder(kind="block", blocks=blocks))
    G = buchberger(transport_module(J, bring))
    dparts = set()
    for gen in G.generators:
        lead = gen.components[0].leading_monomial()
        dparts.add(tuple(lead[i] for i in D))
    minimal = [
        m
        for m in dparts
        if not any(o != m and all(a <= b for a, b in zip(o, m)) for o in dparts)
    ]
    k = None
    seen = set()
    for m in minimal:
        support = [pos for pos, e in enumerate(m) if e]
        if len(support) != 1:
            return None
        var = D[support[0]]
        if var == d_last:
            k = m[support[0]]
        elif m[support[0]] == 1:
            seen.add(var)
        else:
            return None
    if k is None or seen != set(D) - {d_last}:
        return None
    return k


def _zero_dim_primes(J: Submodule, u: tuple[int, ...], seed: int, depth: int):
    """Minimal primes of J when J is zero dimensional over Q(u).

    Raises _CertificationFailure when rational factorization cannot certify
    the function-field structure for any choice of last variable.
    """
    ring = J.ring
    D = tuple(i for i in range(ring.n) if i not in set(u))
    mus: dict[int, tuple[int, tuple | None]] = {}
    for d in D:
        mus[d] = _minpoly_data(J, D, d)
    for d in D:
        _deg, coeffs = mus[d]
        if coeffs is None:
            continue
        factors = univariate_factor(coeffs)
        if len(factors) == 1 and factors[0][1] == 1:
            continue
        out = []
        for fc, _mult in factors:
            p = _poly_in_var(ring, d, fc)
            out.extend(_min_ass_rec(canonical(_ideal_sum(J, [p])), seed, depth + 1))
        return _minimalize(out)
    for d_last in D:
        k = _shape_exponent(J, D, d_last)
        if k is None:
            continue
        if k == 1:
            return (canonical(J),)
        deg, coeffs = mus[d_last]
        if coeffs is None or deg != k:
            continue
        return (canonical(J),)
    raise _CertificationFailure("no variable ordering certifies the shape")


def _gtz_split(I: Submodule, u: tuple[int, ...], seed: int, depth: int):
    ring = I.ring
    D = tuple(i for i in range(ring.n) if i not in set(u))
    bring = ring.with_order(MonomialOrder(kind="block", blocks=(D,)))
    G = buchberger(transport_module(I, bring))
    coeffs = set()
    for gen in G.generators:
        p = gen.components[0]
        if not any(p.leading_monomial()[i] for i in D):
            raise _CertificationFailure("independent set meets the ideal")
        c = _field_lead_coefficient(p, D)
        if not c.is_constant():
            coeffs.add(c)
    if coeffs:
        h_b = bring.one()
        for c in sorted(coeffs, key=render_polynomial):
            h_b = h_b * c
        h = transport_polynomial(h_b, ring)
        J, m = saturate(I, ideal(ring, [h]))
    else:
        h, (J, m) = None, (canonical(I), 0)
    if is_unit_ideal(J):
        raise _CertificationFailure("saturation by lead coefficients is trivial")
    primes = list(_zero_dim_primes(J, u, seed, depth))
    if h is not None and m >= 1:
        primes.extend(_min_ass_rec(canonical(_ideal_sum(I, [h])), seed, depth + 1))
    return primes


def _candidate_independent_sets(I: Submodule):
    lead_based = independent_sets(I)
    for u in lead_based:
        yield u
    d = krull_dim(I)
    tried = set(lead_based)
    if d <= 0:
        return
    n = I.ring.n
    for combo in combinations(range(n), d):
        if combo in tried:
            continue
        drop = tuple(i for i in range(n) if i not in combo)
        if not eliminate(I, drop).generators:
            yield combo


def _shear_pairs(ring: RingContext, D: tuple[int, ...]):
    if len(D) >= 2:
        for i in D:
            for j in D:
                if i != j:
                    yield i, j
    for i in D:
        for j in range(ring.n):
            if j not in D:
                yield i, j


def _apply_shear(I: Submodule, i: int, j: int, lam: int) -> Submodule:
    ring = I.ring
    image = ring.variable(i) + ring.variable(j) * lam
    return canonical(
        ideal(ring, [substitute(p, {i: image}) for p in ideal_generators(I)])
    )


def _unshear_prime(P: Submodule, i: int, j: int, lam: int) -> Submodule:
    ring = P.ring
    image = ring.variable(i) - ring.variable(j) * lam
    return canonical(
        ideal(ring, [substitute(p, {i: image}) for p in ideal_generators(P)])
    )


_MIN_ASS_CACHE: dict[tuple[Submodule, int], tuple[Submodule, ...]] = {}


def _min_ass_rec(I: Submodule, seed: int, depth: int) -> tuple[Submodule, ...]:
    Ic = canonical(I)
    key = (Ic, seed)
    hit = _MIN_ASS_CACHE.get(key)
    if hit is not None:
        return hit
    if depth > _MAX_DEPTH:
        raise DecompositionError("recursion limit hit while splitting the ideal")
    if is_unit_ideal(Ic):
        result: tuple[Submodule, ...] = ()
        _MIN_ASS_CACHE[key] = result
        return result
    if not Ic.generators:
        result = (Ic,)
        _MIN_ASS_CACHE[key] = result
        return result
    for u in _candidate_independent_sets(Ic):
        try:
            result = _minimalize(_gtz_split(Ic, u, seed, depth))
            _MIN_ASS_CACHE[key] = result
            return result
        except _CertificationFailure:
            continue
    rot = seed % len(_SHEAR_LAMBDAS)
    schedule = _SHEAR_LAMBDAS[rot:] + _SHEAR_LAMBDAS[:rot]
    first_sets = independent_sets(Ic)
    u0 = first_sets[0] if first_sets else ()
    D0 = tuple(i for i in range(Ic.ring.n) if i not in set(u0))
    attempts = 0
    for i, j in _shear_pairs(Ic.ring, D0):
        for lam in schedule:
            if attempts >= _MAX_SHEARS:
                break
            attempts += 1
            sheared = _apply_shear(Ic, i, j, lam)
            try:
                primes = _min_ass_rec(sheared, seed, depth + 1)
            except DecompositionError:
                continue
            result = _minimalize(
                _unshear_prime(P, i, j, lam) for P in primes
            )
            _MIN_ASS_CACHE[key] = result
            return result
        if attempts >= _MAX_SHEARS:
            break
    raise DecompositionError(
        "cannot certify minimal primes; the ideal appears to need factorization "
        "over a function field, which rational coefficients do not reach"
    )


def min_ass(I: Submodule, seed: int = 0) -> list[Submodule]:
    """Minimal associated primes of an ideal, canonical and sorted."""
    if I.ambient_rank != 1:
        raise ValueError("minimal primes are computed for ideals")
    return list(_min_ass_rec(canonical(I), seed, 0))


def radical_equidim(I: Submodule, seed: int = 0) -> Submodule:
    """Radical of an equidimensional ideal as the intersection of its primes."""
    primes = min_ass(I, seed)
    if not primes:
        return _unit_ideal(I.ring)
    return canonical(intersect_many(primes))


def inter_ass_prim(M: Submodule, c: int, seed: int = 0) -> Submodule:
    """Intersection of the codimension-c associated primes, or the unit ideal."""
    E = ext_module(c, M)
    if E.is_zero:
        return _unit_ideal(M.ring)
    if codim(E.annihilator) != c:
        return _unit_ideal(M.ring)
    return radical_equidim(equidim_hull(E.annihilator), seed)


# ---------------------------------------------------------------------------
# localization
# ---------------------------------------------------------------------------


def localize_module(A: Submodule, J: Submodule, seed: int = 0) -> Submodule:
    """Contraction of A under localization at the prime ideal J.

    Keeps exactly the primary components whose prime is contained in J, by
    saturating away every associated prime that is not.
    """
    ring = A.ring
    if J.ambient_rank != 1:
        raise ValueError("localization expects a prime ideal")
    Ac = canonical(A)
    if buchberger(Ac).is_full():
        return Ac
    K = None
    for b in range(codim(Ac), ring.n + 1):
        H = ass_prim_codim(Ac, b)
        if is_unit_ideal(H):
            continue
        bad = [P for P in min_ass(H, seed) if not is_sub(P, J)]
        if not bad:
            continue
        Kb = intersect_many(bad)
        K = Kb if K is None else intersect(K, Kb)
    if K is None:
        return Ac
    return canonical(saturate(Ac, K)[0])


# ---------------------------------------------------------------------------
# primary components
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    """One primary component with its prime and the witness exponent used."""

    module: Submodule
    prime: Submodule
    codim: int
    embedded: bool
    witness_exponent: int
    hull_trace: tuple[tuple[int, Submodule], ...]


@dataclass(frozen=True)
class DecompositionResult:
    input: Submodule
    components: tuple[Component, ...]


def primary_component(
    A: Submodule, P: Submodule, bound: int = 50, seed: int = 0
) -> tuple[Submodule, int, tuple[tuple[int, Submodule], ...]]:
    """P-primary component of A with the least power of P that witnesses it.

    Returns (component, exponent, trace of (exponent, hull) attempts).
    """
    ring = A.ring
    s = A.ambient_rank
    AP = localize_module(A, P, seed)
    AP2 = canonical(saturate(AP, P)[0])
    B = full_module(ring, s)
    T = _ideal_times_module(P, B)
    trace = []
    for m in range(1, bound + 1):
        Q = equidim_hull(canonical(_module_sum(A, T)))
        trace.append((m, Q))
        if is_sub(intersect(AP2, Q), AP):
            return Q, m, tuple(trace)
        T = _ideal_times_module(P, T)
    shown = ", ".join(
        render_polynomial(g.components[0]) for g in canonical(P).generators
    )
    raise DecompositionError(
        f"no witness exponent up to {bound} isolates the component at ({shown})"
    )


def primary_decomposition(
    M: Submodule, bound: int = 50, seed: int = 0
) -> DecompositionResult:
    """Irredundant primary decomposition of a proper submodule."""
    ring = M.ring
    n = ring.n
    Mc = canonical(M)
    if buchberger(Mc).is_full():
        return DecompositionResult(Mc, ())
    N1 = equidim_hull(Mc)
    pieces: list[tuple[Submodule, Submodule, int, tuple]] = []
    N = None
    for P in min_ass(annihilator(N1), seed):
        Q, m, trace = primary_component(N1, P, bound, seed)
        pieces.append((Q, P, m, trace))
        N = Q if N is None else intersect(N, Q)
    if N is None:
        raise DecompositionError("no minimal primes found for a proper module")
    if not module_equal(N, Mc):
        done = False
        for f in range(codim(Mc) + 1, n + 1):
            Hf = ass_prim_codim(Mc, f)
            if is_unit_ideal(Hf):
                continue
            for P in min_ass(Hf, seed):
                Q, m, trace = primary_component(Mc, P, bound, seed)
                pieces.append((Q, P, m, trace))
                N = intersect(N, Q)
                if module_equal(N, Mc):
                    done = True
                    break
            if done:
                break
        if not module_equal(N, Mc):
            raise DecompositionError(
                "computed components do not intersect back to the input"
            )
    idx = 0
    while idx < len(pieces) and len(pieces) > 1:
        rest = [p[0] for k, p in enumerate(pieces) if k != idx]
        if module_equal(intersect_many(rest), Mc):
            pieces.pop(idx)
        else:
            idx += 1
    primes = [p[1] for p in pieces]
    comps = []
    for Q, P, m, trace in pieces:
        emb = any(other != P and is_sub(other, P) for other in primes)
        comps.append(
            Component(
                module=canonical(Q),
                prime=P,
                codim=codim(P),
                embedded=emb,
                witness_exponent=m,
                hull_trace=trace,
            )
        )
    comps.sort(key=lambda c: (c.codim, _render_key(c.prime)))
    return DecompositionResult(Mc, tuple(comps))
