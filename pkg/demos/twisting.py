"""Twisting a structure by powers of its own structure map.

For a multiplicative structure the map alpha is a self-morphism, so
composing the bracket and cobracket with its powers produces a whole
tower of new valid structures.  Here the tower is built over a fully
symbolic catalog entry and re-checked at every floor.
"""

from hlsb import expand_variants, get_row, twist_power

variant = expand_variants(get_row("diagonal-1"))[0]
B = variant.bialgebra
print("base structure:", variant.ident)
print("ring parameters:", ", ".join(B.ring.names))

def combo(vec, labels):
    terms = ["%s %s" % (v, l) for v, l in zip(vec, labels) if v]
    return " + ".join(terms) if terms else "0"


# the odd eigenvalue is -1, so the odd-odd cobracket constant is fixed by
# every power of alpha; the bracket constants pick up a4 factors instead
for n in range(4):
    T = twist_power(B, n)
    report = T.check(multiplicative=True)
    print("twist by alpha^%d -> %s" % (n, report.summary()))
    print("    [e1, e2] =", combo(T.algebra.bracket_of(0, 1), B.basis.labels),
          "  delta(e1) =", T.coalgebra.delta(0))
