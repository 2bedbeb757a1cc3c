"""
Duality and the invariant-pairing double
========================================

Transposing the structure constants across the pairing turns the
cobracket of a structure into a bracket on the dual space and vice
versa.  Doing it twice is the identity.  When the structure map is
involutive, the original and its dual act on each other by twisted
coadjoint actions, and the direct sum carries a bracket with a canonical
invariant pairing; the report lists every condition that was checked.
"""

from fractions import Fraction

from hlsb import (
    concrete_variant,
    dual_matched_pair,
    dualize,
    expand_variants,
    get_row,
    manin_supertriple,
)

variant = expand_variants(get_row("diagonal-1"))[0]

D = dualize(variant.bialgebra)
print("dual of", variant.ident, "->", D.check(multiplicative=True).summary())
DD = dualize(D)
print("double dual returns the original:",
      DD.bracket == variant.bialgebra.bracket
      and DD.cobracket == variant.bialgebra.cobracket)

# an involutive member of the family: alpha = diag(1, 1, -1)
B = concrete_variant(variant, assignment={"a4": 1, "b4": 2, "b5": 3, "c5": 5})
g, gstar = B.algebra, dualize(B).algebra

pair = dual_matched_pair(g, gstar)
double = pair.double()
print("pair double has dimension", double.basis.dim,
      "with labels", ", ".join(double.basis.labels))
print("double validity:", double.check().summary())

triple = manin_supertriple(g, gstar)
print("invariant pairing report:", triple.report.summary())
print("pairing matrix determinant:", triple.form.determinant())
