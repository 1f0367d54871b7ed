"""Decompose a submodule of a rank-3 free module over Q[x,y,z].

Modules work exactly like ideals here: the associated primes live in the
ring, the components live in the ambient free module, and the rank-0 part
(the zero prime) shows up whenever the quotient has positive rank.
"""

from primarydec import (
    FreeElement,
    MonomialOrder,
    RingContext,
    Submodule,
    primary_decomposition,
    render_polynomial,
    validate_decomposition,
)

R = RingContext(("x", "y", "z"), MonomialOrder(kind="degrevlex"))
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


def vec(g):
    return "[" + ", ".join(render_polynomial(p) for p in g.components) + "]"


print("generators of M in Q[x,y,z]^3:")
for g in M.generators:
    print(" ", vec(g))
print()

result = primary_decomposition(M)
for k, comp in enumerate(result.components, start=1):
    prime = ", ".join(
        render_polynomial(g.components[0]) for g in comp.prime.generators
    )
    kind = "embedded" if comp.embedded else "isolated"
    print(f"component {k} ({kind}): prime ({prime or '0'}), codim {comp.codim}")
    for g in comp.module.generators:
        print("   ", vec(g))

report = validate_decomposition(M, result.components)
print()
print("validator:", "ok" if report.ok else report.messages)
