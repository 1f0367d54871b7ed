"""Free resolutions, Ext modules against the ring, and the hull of a module.

A submodule M of F = R^s presents M' = F/M.  The codimension-c part of M' is
controlled by Ext^c(M', R): its annihilator cuts out the associated primes of
codimension c, and the kernel of the canonical map from M' into the double
Ext at c = codim(M') is exactly the intersection of the primary components of
minimal codimension, pulled back to F.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groebner import (
    annihilator,
    buchberger,
    canonical,
    codim,
    is_unit_ideal,
    krull_dim,
    lift,
    modulo_kernel,
    reduce_columns,
    saturate,
    syzygies,
)
from .polyring import (
    FreeElement,
    Polynomial,
    PolyMatrix,
    RingContext,
    Submodule,
    ideal,
)


class HomologyError(ValueError):
    """The requested homological construction is not defined for the input."""


# ---------------------------------------------------------------------------
# resolutions
# ---------------------------------------------------------------------------


def _to_grid(m: PolyMatrix) -> list[list[Polynomial]]:
    return [[m.entry(i, j) for j in range(m.ncols)] for i in range(m.nrows)]


def _from_grid(ring: RingContext, grid: list[list[Polynomial]], nrows: int) -> PolyMatrix:
    ncols = len(grid[0]) if grid else 0
    cols = [
        FreeElement(ring, tuple(grid[i][j] for i in range(nrows)))
        for j in range(ncols)
    ]
    return PolyMatrix(ring, nrows, cols)


def _find_constant(grid) -> tuple[int, int] | None:
    for i, row in enumerate(grid):
        for j, p in enumerate(row):
            if not p.is_zero() and p.is_constant():
                return i, j
    return None


def _drop_row(grid, i0):
    del grid[i0]


def _drop_col(grid, j0):
    for row in grid:
        del row[j0]


def _eliminate(grids, k, i0, j0):
    P = grids[k]
    c = P[i0][j0].constant_value()
    ncols = len(P[0])
    nrows = len(P)
    for j in range(ncols):
        if j == j0 or P[i0][j].is_zero():
            continue
        lam = P[i0][j] * (Fraction(1) / c)
        for i in range(nrows):
            P[i][j] = P[i][j] - lam * P[i][j0]
        if k + 1 < len(grids) and grids[k + 1]:
            nxt = grids[k + 1]
            for l in range(len(nxt[0])):
                nxt[j0][l] = nxt[j0][l] + lam * nxt[j][l]
    for i in range(nrows):
        if i == i0 or P[i][j0].is_zero():
            continue
        mu = P[i][j0] * (Fraction(1) / c)
        for j in range(ncols):
            P[i][j] = P[i][j] - mu * P[i0][j]
        prev = grids[k - 1]
        if prev:
            for r in range(len(prev)):
                prev[r][i0] = prev[r][i0] + mu * prev[r][i]
    _drop_row(P, i0)
    _drop_col(P, j0)
    if grids[k - 1]:
        _drop_col(grids[k - 1], i0)
    if k + 1 < len(grids) and grids[k + 1]:
        _drop_row(grids[k + 1], j0)


def _prune(grids) -> None:
    while True:
        hit = False
        for k in range(1, len(grids)):
            if not grids[k] or not grids[k][0]:
                continue
            spot = _find_constant(grids[k])
            if spot is not None:
                _eliminate(grids, k, *spot)
                hit = True
                break
        if not hit:
            return


def _resolve(first: PolyMatrix, length: int) -> list[PolyMatrix]:
    ring = first.ring
    maps = [first]
    for _k in range(1, length):
        S = syzygies(maps[-1].to_submodule())
        maps.append(PolyMatrix.from_submodule(S))
    grids = [_to_grid(m) for m in maps]
    _prune(grids)
    out = []
    nrows = first.nrows
    for g in grids:
        m = _from_grid(ring, g, len(g)) if g else PolyMatrix(ring, nrows, [])
        out.append(m)
        nrows = m.ncols
    return out


def free_resolution(M: Submodule, length: int) -> list[PolyMatrix]:
    """Matrices maps[k] of F_{k+1} -> F_k with maps[0] presenting M inside F."""
    if length < 1:
        raise ValueError("resolution length must be positive")
    return _resolve(PolyMatrix.from_submodule(canonical(M)), length)


def presentation_resolution(P: Submodule, length: int) -> list[PolyMatrix]:
    """Resolution of coker(P) keeping the given ambient rank of generators."""
    if length < 1:
        raise ValueError("resolution length must be positive")
    return _resolve(PolyMatrix.from_submodule(canonical(P)), length)


# ---------------------------------------------------------------------------
# Ext modules
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtModule:
    """Ext^c(F/M, R) given by kernel generators and their relations."""

    generators: Submodule
    presentation: Submodule
    annihilator: Submodule
    is_zero: bool


def _standalone_prune(pres: Submodule) -> Submodule:
    grid = _to_grid(PolyMatrix.from_submodule(pres))
    grids: list = [[], grid]  # empty neighbour slot, skipped by _eliminate
    while grid and grid[0]:
        spot = _find_constant(grid)
        if spot is None:
            break
        _eliminate(grids, 1, *spot)
    ring = pres.ring
    if not grid:
        return Submodule(ring, 0, [])
    return _from_grid(ring, grid, len(grid)).to_submodule()


def ext_module(c: int, M: Submodule) -> ExtModule:
    ring = M.ring
    if c < 0:
        raise ValueError("negative cohomological degree")
    unit = ideal(ring, [ring.one()])
    maps = free_resolution(M, c + 1)
    t_c = maps[c].transpose()
    K = syzygies(t_c.to_submodule())
    if c >= 1:
        t_prev = maps[c - 1].transpose()
        K = reduce_columns(PolyMatrix.from_submodule(K), buchberger(t_prev.to_submodule()))
        pres = modulo_kernel(PolyMatrix.from_submodule(K), t_prev)
    else:
        pres = syzygies(K)
    if not K.generators:
        return ExtModule(K, pres, canonical(unit), True)
    pruned = _standalone_prune(pres)
    if pruned.ambient_rank == 0 or buchberger(pruned).is_full():
        return ExtModule(K, pres, canonical(unit), True)
    ann = annihilator(pruned)
    return ExtModule(K, pres, canonical(ann), False)


# ---------------------------------------------------------------------------
# the canonical map into the double Ext
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonMapResult:
    """Kernel and cokernel data of F/M -> Ext^c(Ext^c(F/M, R), R)."""

    codimension: int
    kernel_preimage: Submodule
    kernel_presentation: Submodule
    cokernel_presentation: Submodule


def canon_map(M: Submodule) -> CanonMapResult:
    ring = M.ring
    G = buchberger(M)
    if G.is_full():
        raise HomologyError("module equals its ambient free module")
    Mc = G.module
    c = ring.n - krull_dim(G)
    if c == 0:
        Mmat = PolyMatrix.from_submodule(Mc)
        K = syzygies(Mmat.transpose().to_submodule())
        Kmat = PolyMatrix.from_submodule(K)
        Ke = syzygies(Kmat.transpose().to_submodule())
        S1 = syzygies(K)
        DD = syzygies(PolyMatrix.from_submodule(S1).transpose().to_submodule())
        Co = modulo_kernel(PolyMatrix.from_submodule(DD), Kmat.transpose())
        ker_pres = modulo_kernel(PolyMatrix.from_submodule(Ke), Mmat)
        return CanonMapResult(0, Ke, ker_pres, Co)
    maps = free_resolution(Mc, c + 1)
    t = [m.transpose() for m in maps]
    K = syzygies(t[c].to_submodule())
    K = reduce_columns(
        PolyMatrix.from_submodule(K), buchberger(t[c - 1].to_submodule())
    )
    if not K.generators:
        raise HomologyError("vanishing Ext at the codimension of the module")
    A = modulo_kernel(PolyMatrix.from_submodule(K), t[c - 1])
    gmaps = presentation_resolution(A, c + 1)
    cur = PolyMatrix.from_submodule(K)
    for i in range(1, c + 1):
        B = cur.mul(gmaps[i - 1])
        T = lift(t[c - i].to_submodule(), B.to_submodule())
        cur = T
    curT = cur.transpose()
    gT = gmaps[c - 1].transpose()
    Ke = modulo_kernel(curT, gT)
    DD = syzygies(gmaps[c].transpose().to_submodule())
    Co = modulo_kernel(PolyMatrix.from_submodule(DD), curT.hconcat(gT))
    ker_pres = modulo_kernel(
        PolyMatrix.from_submodule(Ke), PolyMatrix.from_submodule(Mc)
    )
    return CanonMapResult(c, Ke, ker_pres, Co)


def equidim_hull(M: Submodule) -> Submodule:
    """Intersection of the primary components of minimal codimension."""
    return canonical(canon_map(M).kernel_preimage)


def rem_comp(M: Submodule, c: int) -> Submodule:
    """Strip every primary component of codimension above c."""
    ring = M.ring
    N = canonical(M)
    for b in range(ring.n, c, -1):
        E = ext_module(b, M)
        if E.is_zero:
            continue
        if codim(E.annihilator) == b:
            N = saturate(N, E.annihilator)[0]
    return canonical(N)


def ass_prim_codim(M: Submodule, c: int) -> Submodule:
    """Radical-like ideal whose minimal primes are the codim-c associated primes."""
    ring = M.ring
    unit = canonical(ideal(ring, [ring.one()]))
    E = ext_module(c, M)
    if E.is_zero:
        return unit
    I_c = E.annihilator
    if codim(I_c) != c:
        return unit
    return equidim_hull(I_c)
