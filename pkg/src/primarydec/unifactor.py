"""Factorization of univariate polynomials over Q.

Polynomials are coefficient sequences from the constant term upward.  The
pipeline is squarefree splitting, factorization modulo a good small prime,
Hensel lifting past the coefficient bound, and subset recombination.  Only
monic irreducible factors are reported; the leading coefficient of the input
is discarded.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt, lcm
from typing import Sequence

# ---------------------------------------------------------------------------
# rational coefficient arithmetic
# ---------------------------------------------------------------------------


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _q_deg(a: list) -> int:
    return len(a) - 1


def _q_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _q_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _q_divmod(a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = Fraction(1) / b[-1]
    while len(a) >= len(b):
        if not a[-1]:
            a.pop()
            continue
        shift = len(a) - len(b)
        c = a[-1] * inv
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a.pop()
    return _trim(q), _trim(a)


def _q_exact_div(a: list, b: list) -> list:
    q, r = _q_divmod(a, b)
    if r:
        raise ArithmeticError("division was not exact")
    return q


def _q_monic(a: list) -> list:
    inv = Fraction(1) / a[-1]
    return [c * inv for c in a]


def _q_deriv(a: list) -> list:
    return _trim([a[i] * i for i in range(1, len(a))])


def _q_gcd(a: list, b: list) -> list:
    a, b = list(a), list(b)
    while b:
        _q, r = _q_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    return _q_monic(a)


def _squarefree_parts(f: list) -> list[tuple[list, int]]:
    """Yun decomposition of a monic polynomial: [(part, multiplicity)]."""
    df = _q_deriv(f)
    u = _q_gcd(f, df)
    v = _q_exact_div(f, u)
    w = _q_exact_div(df, u)
    out = []
    k = 1
    while _q_deg(v) > 0:
        h = _q_gcd(v, _q_sub(w, _q_deriv(v)))
        if _q_deg(h) > 0:
            out.append((h, k))
        v2 = _q_exact_div(v, h)
        w = _q_exact_div(_q_sub(w, _q_deriv(v)), h)
        v = v2
        k += 1
    return out


# ---------------------------------------------------------------------------
# arithmetic mod m (m prime or prime power)
# ---------------------------------------------------------------------------


def _p_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _p_mul(a: list, b: list, m: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % m
    return _p_trim(out)


def _p_sub(a: list, b: list, m: int) -> list:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m for i in range(n)]
    return _p_trim(out)


def _p_divmod(a: list, b: list, m: int) -> tuple[list, list]:
    a = list(a)
    inv = pow(b[-1], -1, m)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        if a[-1] % m == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        c = (a[-1] * inv) % m
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % m
        a.pop()
    return _p_trim(q), _p_trim(a)


def _p_gcd(a: list, b: list, p: int) -> list:
    a, b = _p_trim(list(a)), _p_trim(list(b))
    while b:
        _q, r = _p_divmod(a, b, p)
        a, b = b, r
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [(c * inv) % p for c in a]


def _p_ext_gcd(a: list, b: list, p: int):
    """(g, s, t) with s a + t b = g (monic) over the prime field."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _p_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _p_sub(s0, _p_mul(q, s1, p), p)
        t0, t1 = t1, _p_sub(t0, _p_mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    scale = lambda v: [(c * inv) % p for c in v]
    return scale(r0), scale(s0), scale(t0)


def _p_pow_mod(base: list, e: int, mod: list, p: int) -> list:
    result = [1]
    b = _p_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _p_divmod(_p_mul(result, b, p), mod, p)[1]
        b = _p_divmod(_p_mul(b, b, p), mod, p)[1]
        e >>= 1
    return result


def _berlekamp(f: list, p: int) -> list[list]:
    """Irreducible monic factors of a monic squarefree polynomial mod p."""
    d = _q_deg(f)
    if d == 1:
        return [f]
    xp = _p_pow_mod([0, 1], p, f, p)
    rows = []
    cur = [1]
    for _i in range(d):
        row = [cur[j] if j < len(cur) else 0 for j in range(d)]
        rows.append(row)
        cur = _p_divmod(_p_mul(cur, xp, p), f, p)[1]
    # kernel of (Q - I)^T acting on coefficient vectors v: v(x)^p = v(x) mod f
    mat = [[(rows[i][j] - (1 if i == j else 0)) % p for i in range(d)] for j in range(d)]
    basis = _kernel_basis(mat, p)
    r = len(basis)
    if r == 1:
        return [f]
    factors = [f]
    for vec in basis:
        v = _p_trim(list(vec))
        if _q_deg(v) < 1:
            continue
        for s in range(p):
            if len(factors) == r:
                return factors
            vs = _p_sub(v, [s], p)
            nxt = []
            for g in factors:
                if _q_deg(g) == 1:
                    nxt.append(g)
                    continue
                h = _p_gcd(g, vs, p)
                if 0 < _q_deg(h) < _q_deg(g):
                    nxt.append(h)
                    nxt.append(_p_divmod(g, h, p)[0])
                else:
                    nxt.append(g)
            factors = nxt
    return factors


def _kernel_basis(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat)
    m = [row[:] for row in mat]
    pivots: dict[int, int] = {}
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, n):
            if m[r][col] % p:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [(c * inv) % p for c in m[row]]
        for r in range(n):
            if r != row and m[r][col] % p:
                c = m[r][col]
                m[r] = [(a - c * b) % p for a, b in zip(m[r], m[row])]
        pivots[col] = row
        row += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for col, r in pivots.items():
            vec[col] = (-m[r][fc]) % p
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# Hensel lifting and recombination
# ---------------------------------------------------------------------------


def _hensel_pair(f: list, g: list, h: list, p: int, target: int):
    """Lift f = g*h from mod p to mod p^k >= target; all monic."""
    _one, s, t = _p_ext_gcd(g, h, p)
    m = p
    g, h = list(g), list(h)
    while m < target:
        m2 = m * m
        e = [(fc - c) % m2 for fc, c in _pad_pair(f, _p_mul(g, h, m2))]
        e = _p_trim(e)
        if e:
            b = _p_divmod(_p_mul(s, e, m2), h, m2)[1]
            a = _p_divmod(_p_sub(e, _p_mul(b, g, m2), m2), h, m2)[0]
            g = _p_trim([(x + y) % m2 for x, y in _pad_pair(g, _p_mul(a, [1], m2))])
            h = _p_trim([(x + y) % m2 for x, y in _pad_pair(h, b)])
        # refresh the Bezout pair so the next round works mod the new modulus
        d = [(x - y) % m2 for x, y in _pad_pair([1], _p_trim(
            [(u + v) % m2 for u, v in _pad_pair(_p_mul(s, g, m2), _p_mul(t, h, m2))]
        ))]
        d = _p_trim(d)
        if d:
            ds = _p_divmod(_p_mul(s, d, m2), h, m2)[1]
            dt = _p_divmod(_p_sub(_p_mul(d, [1], m2), _p_mul(ds, g, m2), m2), h, m2)[0]
            s = _p_trim([(x + y) % m2 for x, y in _pad_pair(s, ds)])
            t = _p_trim([(x + y) % m2 for x, y in _pad_pair(t, dt)])
        m = m2
    return g, h, m


def _pad_pair(a: list, b: list):
    n = max(len(a), len(b))
    return zip(
        [a[i] if i < len(a) else 0 for i in range(n)],
        [b[i] if i < len(b) else 0 for i in range(n)],
    )


def _hensel_list(f: list, parts: list[list], p: int, target: int) -> tuple[list[list], int]:
    if len(parts) == 1:
        m = p
        while m < target:
            m *= m
        return [[c % m for c in f]], m
    head = parts[0]
    rest = parts[1:]
    tail = [1]
    for q in rest:
        tail = _p_mul(tail, q, p)
    g, h, m = _hensel_pair(f, head, tail, p, target)
    lifted_rest, _m2 = _hensel_list(h, rest, p, target)
    return [g] + lifted_rest, m


def _symmetric(a: list, m: int) -> list[int]:
    half = m // 2
    return [c - m if c > half else c for c in a]


def _z_divides(f: list[int], g: list[int]) -> bool:
    """Does the monic integer polynomial g divide f exactly over the integers?"""
    a = [int(c) for c in f]
    while len(a) >= len(g):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1]
        shift = len(a) - len(g)
        for i, y in enumerate(g):
            a[shift + i] -= c * y
        a.pop()
    return not _p_trim(a)


def _z_exact_div(f: list[int], g: list[int]) -> list[int]:
    a = [int(c) for c in f]
    q = [0] * (len(a) - len(g) + 1)
    while len(a) >= len(g):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1]
        q[len(a) - len(g)] = c
        for i, y in enumerate(g):
            a[len(a) - len(g) + i] -= c * y
        a.pop()
    return q


_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73]


def _more_primes(start: int):
    n = start
    while True:
        n += 2
        if all(n % q for q in range(3, isqrt(n) + 1, 2)):
            yield n


def _factor_squarefree_monic_integer(f: list[int]) -> list[list[int]]:
    """Irreducible monic integer factors of a monic squarefree integer poly."""
    d = len(f) - 1
    if d <= 1:
        return [f] if d == 1 else []
    df = _p_trim([f[i] * i for i in range(1, len(f))])

    chosen = None
    candidates = iter(_PRIMES)
    extra = None
    while chosen is None:
        try:
            p = next(candidates)
        except StopIteration:
            if extra is None:
                extra = _more_primes(_PRIMES[-1])
            p = next(extra)
        fp = _p_trim([c % p for c in f])
        if _q_deg(fp) != d:
            continue
        if _q_deg(_p_gcd(fp, [c % p for c in df], p)) == 0:
            chosen = p
    p = chosen
    fp = [c % p for c in f]
    model = _berlekamp(fp, p)
    if len(model) == 1:
        return [f]
    model.sort(key=lambda g: (len(g), tuple(g)))
    norm2 = isqrt(sum(c * c for c in f)) + 1
    bound = 2 * (1 << d) * norm2 + 1
    lifted, modulus = _hensel_list(f, model, p, bound)

    remaining = list(range(len(lifted)))
    result: list[list[int]] = []
    current = [int(c) for c in f]
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        for combo in combinations(remaining, size):
            prod = [1]
            for i in combo:
                prod = _p_mul(prod, lifted[i], modulus)
            cand = _symmetric(prod, modulus)
            if _z_divides(current, cand):
                result.append(cand)
                current = _z_exact_div(current, cand)
                remaining = [i for i in remaining if i not in combo]
                hit = True
                break
        if not hit:
            size += 1
    if len(current) > 1:
        result.append(current)
    result.sort(key=lambda g: (len(g), tuple(g)))
    return result


# ---------------------------------------------------------------------------
# public interface
# ---------------------------------------------------------------------------


def univariate_factor(coeffs: Sequence) -> list[tuple[tuple[Fraction, ...], int]]:
    """Monic irreducible factors with multiplicities, constant-term first.

    The constant content and leading coefficient are dropped; a constant
    input yields no factors.
    """
    f = _trim([Fraction(c) for c in coeffs])
    if _q_deg(f) < 1:
        return []
    out: list[tuple[tuple[Fraction, ...], int]] = []
    shift = 0
    while f[0] == 0:
        shift += 1
        f = f[1:]
    if shift:
        out.append(((Fraction(0), Fraction(1)), shift))
    if _q_deg(f) >= 1:
        f = _q_monic(f)
        for part, mult in _squarefree_parts(f):
            for irr in _factor_part(part):
                out.append((tuple(irr), mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def _factor_part(part: list) -> list[list]:
    if _q_deg(part) == 1:
        return [_q_monic(part)]
    # clear denominators, then remove the leading coefficient by substitution:
    # factors of c^(d-1) f(x/c) in y = c x are monic with integer coefficients
    den = 1
    for c in part:
        den = lcm(den, c.denominator)
    zz = [int(c * den) for c in part]
    g = 0
    for c in zz:
        g = gcd(g, c)
    zz = [c // g for c in zz]
    lead = zz[-1]
    d = len(zz) - 1
    monic = [c * lead ** (d - 1 - i) for i, c in enumerate(zz[:-1])] + [1]
    factors = _factor_squarefree_monic_integer(monic)
    out = []
    for fac in factors:
        e = len(fac) - 1
        coeffs = [Fraction(c, lead**(e - i)) for i, c in enumerate(fac)]
        out.append(_q_monic(coeffs))
    return out


def is_irreducible(coeffs: Sequence) -> bool:
    f = _trim([Fraction(c) for c in coeffs])
    if _q_deg(f) < 1:
        return False
    facs = univariate_factor(f)
    return len(facs) == 1 and facs[0][1] == 1 and len(facs[0][0]) == len(f)
