import random

from primarydec.decompose import (
    Component,
    DecompositionError,
    DecompositionResult,
    inter_ass_prim,
    localize_module,
    min_ass,
    primary_component,
    primary_decomposition,
    radical_equidim,
)
from primarydec.groebner import (
    canonical,
    intersect_many,
    is_sub,
    is_unit_ideal,
    module_equal,
)
from primarydec.polyring import (
    FreeElement,
    MonomialOrder,
    RingContext,
    Submodule,
    ideal,
    render_polynomial,
)

import pytest


def ring2() -> RingContext:
    return RingContext(("x", "y"), MonomialOrder(kind="degrevlex"))


def ring3() -> RingContext:
    return RingContext(("x", "y", "z"), MonomialOrder(kind="degrevlex"))


def itext(A: Submodule) -> list[str]:
    return [render_polynomial(g.components[0]) for g in canonical(A).generators]


def primes_text(primes) -> list[list[str]]:
    return [itext(P) for P in primes]


def test_min_ass_principal_monomial():
    R = ring2()
    x, y = R.variable(0), R.variable(1)
    assert primes_text(min_ass(ideal(R, [x * y]))) == [["x"], ["y"]]


def test_min_ass_drops_embedded_prime():
    R = ring2()
    x, y = R.variable(0), R.variable(1)
    assert primes_text(min_ass(ideal(R, [x * x, x * y]))) == [["x"]]


def test_min_ass_unit_and_zero():
    R = ring2()
    assert min_ass(ideal(R, [R.one()])) == []
    assert primes_text(min_ass(Submodule(R, 1, []))) == [[]]


def test_min_ass_product_of_coprime_factors():
    R = ring2()
    x, y = R.variable(0), R.variable(1)
    f = (x * x - 2) * (y * y - 3)
    assert primes_text(min_ass(ideal(R, [f]))) == [["x^2 - 2"], ["y^2 - 3"]]


def test_min_ass_zero_dimensional_split():
    R = ring2()
    x, y = R.variable(0), R.variable(1)
    I = ideal(R, [x * x - 2, y * y - 2])
    got = primes_text(min_ass(I))
    assert got == [["x + y", "y^2 - 2"], ["x - y", "y^2 - 2"]]


def test_min_ass_certifies_parabola_prime():
    R = ring2()
    x, y = R.variable(0), R.variable(1)
    I = ideal(R, [x * x - y])
    assert primes_text(min_ass(I)) == [["x^2 - y"]]


def test_min_ass_irreducible_quadric():
    R = ring2()
    x = R.variable(0)
    assert primes_text(min_ass(ideal(R, [x * x + 1]))) == [["x^2 + 1"]]


def test_min_ass_three_axes():
    R = ring3()
    x, y, z = (R.variable(i) for i in range(3))
    I = ideal(R, [x * x * y, x * z * z, y * y * z])
    got = primes_text(min_ass(I))
    assert got == [["y", "x"], ["z", "x"], ["z", "y"]]


def test_min_ass_deterministic_across_seeds():
    R = ring2()
    x, y = R.variable(0), R.variable(1)
    I = ideal(R, [x * x - 2, y * y - 2])
    assert primes_text(min_ass(I, seed=0)) == primes_text(min_ass(I, seed=3))


def test_radical_equidim():
    R = ring2()
    x, y = R.variable(0), R.variable(1)
    assert itext(radical_equidim(ideal(R, [x * y]))) == ["x*y"]
    assert itext(radical_equidim(ideal(R, [x * x]))) == ["x"]


def test_inter_ass_prim_values():
    R = ring2()
    x, y = R.variable(0), R.variable(1)
    I = ideal(R, [x * x, x * y])
    assert itext(inter_ass_prim(I, 1)) == ["x"]
    assert itext(inter_ass_prim(I, 2)) == ["y", "x"]
    assert itext(inter_ass_prim(ideal(R, [x, y]), 1)) == ["1"]


def test_localize_module_known_values():
    R = ring2()
    x, y = R.variable(0), R.variable(1)
    Px = ideal(R, [x])
    assert itext(localize_module(ideal(R, [x * y]), Px)) == ["x"]
    assert is_unit_ideal(localize_module(ideal(R, [y]), Px))
    assert itext(localize_module(ideal(R, [x * x, x * y]), Px)) == ["x"]
    m = ideal(R, [x, y])
    assert itext(localize_module(ideal(R, [x * x, x * y]), m)) == ["x*y", "x^2"]


def test_primary_component_witnesses():
    R = ring2()
    x, y = R.variable(0), R.variable(1)
    Px = ideal(R, [x])
    Q, m, trace = primary_component(ideal(R, [x]), Px)
    assert itext(Q) == ["x"] and m == 1
    Q, m, trace = primary_component(ideal(R, [x * x]), Px)
    assert itext(Q) == ["x^2"] and m == 2
    I = ideal(R, [x * x, x * y])
    P = ideal(R, [x, y])
    Q, m, trace = primary_component(I, P)
    assert itext(Q) == ["y^2", "x*y", "x^2"]
    assert m == 2
    assert [(step, itext(h)) for step, h in trace] == [
        (1, ["y", "x"]),
        (2, ["y^2", "x*y", "x^2"]),
    ]


def test_primary_decomposition_embedded_example():
    R = ring2()
    x, y = R.variable(0), R.variable(1)
    I = ideal(R, [x * x, x * y])
    res = primary_decomposition(I)
    assert isinstance(res, DecompositionResult)
    assert len(res.components) == 2
    first, second = res.components
    assert itext(first.prime) == ["x"]
    assert not first.embedded
    assert first.codim == 1
    assert itext(first.module) == ["x"]
    assert itext(second.prime) == ["y", "x"]
    assert second.embedded
    assert second.codim == 2
    assert itext(second.module) == ["y^2", "x*y", "x^2"]
    assert second.witness_exponent == 2
    inter = intersect_many([c.module for c in res.components])
    assert module_equal(inter, I)


def test_primary_decomposition_three_axes():
    R = ring3()
    x, y, z = (R.variable(i) for i in range(3))
    I = ideal(R, [x * x * y, x * z * z, y * y * z])
    res = primary_decomposition(I)
    primes = [itext(c.prime) for c in res.components]
    assert primes == [["y", "x"], ["z", "x"], ["z", "y"], ["z", "y", "x"]]
    flags = [c.embedded for c in res.components]
    assert flags == [False, False, False, True]
    inter = intersect_many([c.module for c in res.components])
    assert module_equal(inter, I)


def test_primary_decomposition_module_input():
    R = ring3()
    x, y, z = (R.variable(i) for i in range(3))
    zero = R.zero()
    M = Submodule(
        R,
        3,
        [
            FreeElement(R, (x * y, zero, y * z)),
            FreeElement(R, (zero, x * z, z * z)),
        ],
    )
    res = primary_decomposition(M)
    assert res.components
    inter = intersect_many([c.module for c in res.components])
    assert module_equal(inter, M)
    for c in res.components:
        assert is_sub(M, c.module)
        assert c.prime.ambient_rank == 1


def test_primary_decomposition_of_full_and_zero():
    R = ring2()
    assert primary_decomposition(ideal(R, [R.one()])).components == ()
    res = primary_decomposition(Submodule(R, 1, []))
    assert len(res.components) == 1
    only = res.components[0]
    assert itext(only.prime) == []
    assert not only.embedded


def test_primary_decomposition_primary_input():
    R = ring2()
    x, y = R.variable(0), R.variable(1)
    res = primary_decomposition(ideal(R, [x * x, x * y, y * y]))
    assert len(res.components) == 1
    assert itext(res.components[0].prime) == ["y", "x"]
    assert res.components[0].witness_exponent >= 1


def test_component_dataclass_shape():
    R = ring2()
    x = R.variable(0)
    res = primary_decomposition(ideal(R, [x]))
    c = res.components[0]
    assert isinstance(c, Component)
    assert c.hull_trace and c.hull_trace[0][0] == 1


def test_decomposition_error_is_runtime_error():
    assert issubclass(DecompositionError, RuntimeError)


def random_monomial_ideal(R, rng):
    n = R.n
    gens = []
    for _ in range(rng.randint(1, 3)):
        exps = tuple(rng.randint(0, 2) for _ in range(n))
        if all(e == 0 for e in exps):
            exps = (0,) * (n - 1) + (1,)
        gens.append(R.monomial(exps))
    return ideal(R, gens)


def test_random_monomial_decompositions_intersect_back():
    rng = random.Random(11)
    R = ring2()
    for _ in range(10):
        I = random_monomial_ideal(R, rng)
        if is_unit_ideal(I):
            continue
        res = primary_decomposition(I)
        inter = intersect_many([c.module for c in res.components])
        assert module_equal(inter, I)
        primes = [tuple(itext(c.prime)) for c in res.components]
        assert len(primes) == len(set(primes))
