import random

from primarydec.decompose import min_ass, primary_decomposition
from primarydec.groebner import buchberger, canonical, is_member, module_equal
from primarydec.homology import equidim_hull
from primarydec.polyring import (
    FreeElement,
    MonomialOrder,
    RingContext,
    Submodule,
    ideal,
)
from primarydec.verify import (
    membership_oracle,
    monomial_hull_oracle,
    monomial_minimal_primes,
    monomial_primdec_oracle,
    validate_decomposition,
)


def ring_xy():
    return RingContext(("x", "y"), MonomialOrder(kind="degrevlex"))


def ring_xyz():
    return RingContext(("x", "y", "z"), MonomialOrder(kind="degrevlex"))


def mono_ideal(R, exps_list):
    return ideal(R, [R.monomial(e) for e in exps_list])


def gens_text(A):
    out = []
    for g in canonical(A).generators:
        out.append(tuple(str(p) for p in g.components))
    return out


def test_oracle_x2_xy():
    R = ring_xy()
    comps = monomial_primdec_oracle(mono_ideal(R, [(2, 0), (1, 1)]))
    assert [p for p, _g in comps] == [(0,), (0, 1)]
    assert comps[0][1] == ((1, 0),)
    assert ((0, 1) in comps[1][1]) and ((2, 0) in comps[1][1])


def test_oracle_irreducible_split_three_vars():
    R = ring_xyz()
    I = mono_ideal(R, [(2, 1, 0), (1, 0, 2), (0, 2, 1)])
    comps = monomial_primdec_oracle(I)
    primes = [p for p, _g in comps]
    assert primes == [(0, 1), (0, 2), (1, 2), (0, 1, 2)]


def test_oracle_zero_and_primary():
    R = ring_xy()
    assert monomial_primdec_oracle(ideal(R, [])) == [((), ())]
    comps = monomial_primdec_oracle(mono_ideal(R, [(3, 0)]))
    assert comps == [((0,), ((3, 0),))]


def test_hull_oracle_matches_engine_simple():
    R = ring_xy()
    I = mono_ideal(R, [(2, 0), (1, 1)])
    assert module_equal(monomial_hull_oracle(I), equidim_hull(I))
    assert gens_text(monomial_hull_oracle(I)) == [("x",)]


def test_minimal_primes_oracle():
    R = ring_xyz()
    I = mono_ideal(R, [(1, 1, 0), (1, 0, 1)])
    assert monomial_minimal_primes(I) == [(0,), (1, 2)]


def random_monomial_ideal(R, rng, max_gens=5, max_deg=4):
    n = R.n
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exps = [0] * n
        total = rng.randint(1, max_deg)
        for _ in range(total):
            exps[rng.randrange(n)] += 1
        gens.append(R.monomial(tuple(exps)))
    return ideal(R, gens)


def test_hull_oracle_agreement_random():
    rng = random.Random(5)
    R = ring_xyz()
    for _ in range(25):
        I = random_monomial_ideal(R, rng)
        assert module_equal(monomial_hull_oracle(I), equidim_hull(I))


def test_minimal_prime_agreement_random():
    rng = random.Random(6)
    R = ring_xyz()
    for _ in range(15):
        I = random_monomial_ideal(R, rng)
        expected = monomial_minimal_primes(I)
        got = []
        for P in min_ass(I):
            idx = []
            for g in P.generators:
                p = g.components[0]
                assert len(p.terms) == 1
                exps = p.terms[0][0]
                assert sum(exps) == 1
                idx.append(exps.index(1))
            got.append(tuple(sorted(idx)))
        assert sorted(got) == expected, str(gens_text(I))


def test_membership_oracle_positive():
    R = ring_xy()
    x, y = R.variable(0), R.variable(1)
    A = ideal(R, [x * x, x * y + y * y])
    v = (x * y) * (x * x) + (x - y) * (x * y + y * y)
    assert membership_oracle(v, A, 2)
    assert membership_oracle(R.zero(), A, 0)


def test_membership_oracle_negative():
    R = ring_xy()
    x, y = R.variable(0), R.variable(1)
    A = ideal(R, [x * x, y * y])
    assert not membership_oracle(x * y, A, 6)
    assert not membership_oracle(R.one(), A, 4)


def test_membership_oracle_bound_sensitivity():
    R = ring_xy()
    x = R.variable(0)
    A = ideal(R, [x])
    v = x * x * x
    assert not membership_oracle(v, A, 1)
    assert membership_oracle(v, A, 2)


def test_membership_oracle_module():
    R = ring_xy()
    x, y = R.variable(0), R.variable(1)
    A = Submodule(R, 2, [FreeElement(R, (x, y)), FreeElement(R, (R.zero(), x))])
    v = FreeElement(R, (y * x, y * y + x * x))
    assert membership_oracle(v, A, 1)
    w = FreeElement(R, (x, R.zero()))
    assert not membership_oracle(w, A, 4)


def test_membership_oracle_vs_groebner_random():
    rng = random.Random(9)
    R = ring_xy()
    for _ in range(40):
        gens = []
        for _ in range(rng.randint(1, 3)):
            p = R.zero()
            for _ in range(rng.randint(1, 3)):
                e = (rng.randint(0, 2), rng.randint(0, 2))
                p = p + R.monomial(e, rng.randint(-2, 2))
            if not p.is_zero():
                gens.append(p)
        if not gens:
            continue
        A = ideal(R, gens)
        combo = R.zero()
        for g in gens:
            e = (rng.randint(0, 1), rng.randint(0, 1))
            combo = combo + R.monomial(e, rng.randint(-1, 1)) * g
        assert membership_oracle(combo, A, 2)
        assert is_member(FreeElement(R, (combo,)), buchberger(A))
        probe = R.monomial((rng.randint(0, 2), rng.randint(0, 2)), 1)
        if not is_member(FreeElement(R, (probe,)), buchberger(A)):
            assert not membership_oracle(probe, A, 5)


def test_validator_accepts_engine_output():
    R = ring_xy()
    I = mono_ideal(R, [(2, 0), (1, 1)])
    res = primary_decomposition(I)
    report = validate_decomposition(I, res.components)
    assert report.ok
    assert report.as_dict()["ok"] is True


def test_validator_accepts_pairs():
    R = ring_xy()
    I = mono_ideal(R, [(2, 0), (1, 1)])
    comps = [
        (mono_ideal(R, [(1, 0)]), mono_ideal(R, [(1, 0)])),
        (mono_ideal(R, [(2, 0), (0, 1)]), mono_ideal(R, [(1, 0), (0, 1)])),
    ]
    assert validate_decomposition(I, comps).ok


def test_validator_rejects_wrong_intersection():
    R = ring_xy()
    I = mono_ideal(R, [(2, 0), (1, 1)])
    comps = [(mono_ideal(R, [(1, 0)]), mono_ideal(R, [(1, 0)]))]
    report = validate_decomposition(I, comps)
    assert not report.ok
    assert not report.intersection_ok


def test_validator_rejects_nonprimary_component():
    R = ring_xy()
    I = mono_ideal(R, [(2, 0), (1, 1)])
    comps = [
        (I, mono_ideal(R, [(1, 0)])),
        (mono_ideal(R, [(2, 0), (0, 1)]), mono_ideal(R, [(1, 0), (0, 1)])),
    ]
    report = validate_decomposition(I, comps)
    assert not report.components_primary


def test_validator_rejects_duplicate_primes():
    R = ring_xy()
    I = mono_ideal(R, [(2, 0)])
    comps = [
        (mono_ideal(R, [(2, 0)]), mono_ideal(R, [(1, 0)])),
        (mono_ideal(R, [(3, 0)]), mono_ideal(R, [(1, 0)])),
    ]
    report = validate_decomposition(I, comps)
    assert not report.primes_distinct


def test_validator_rejects_redundant_component():
    R = ring_xy()
    I = mono_ideal(R, [(1, 1)])
    comps = [
        (mono_ideal(R, [(1, 0)]), mono_ideal(R, [(1, 0)])),
        (mono_ideal(R, [(0, 1)]), mono_ideal(R, [(0, 1)])),
        (
            mono_ideal(R, [(2, 0), (1, 1), (0, 2)]),
            mono_ideal(R, [(1, 0), (0, 1)]),
        ),
    ]
    report = validate_decomposition(I, comps)
    assert not report.irredundant


def test_validator_full_module_empty_components():
    R = ring_xy()
    assert validate_decomposition(ideal(R, [R.one()]), []).ok
    assert not validate_decomposition(mono_ideal(R, [(1, 0)]), []).ok
