# Building cobrackets from solutions of the twisted adjoint conditions.
#
# Any even, skew, alpha-fixed 2-tensor r whose bracket square lies in the
# kernel of the twisted triple adjoint action induces a cobracket
# delta(x) = ad_x(r).  The resulting structure is quasi-triangular
# exactly when r squares to zero under the twisted bracket placements,
# and the three classical characterizations of that condition always
# agree.

import random

from hlsb import (
    alpha_fixed_tensors,
    check_coboundary,
    coboundary_from_r,
    concrete_variant,
    expand_variants,
    get_row,
    quasi_triangular_equivalences,
    random_fixed_tensor,
    yang_baxter_residual,
)

rng = random.Random(7)
variant = expand_variants(get_row("diagonal-1"))[0]
B = concrete_variant(variant, rng=rng)
A = B.algebra

span = alpha_fixed_tensors(A, skew=True, even_only=True)
print("skew even fixed tensors on", variant.ident, "form a space of dim",
      len(span))

r = random_fixed_tensor(A, rng, skew=True, even_only=True, span=span)
print("sampled r =", r)
print("bracket square [[r,r]] =", yang_baxter_residual(A, r))

C = coboundary_from_r(A, r)
print("induced cobracket on e1:", C.coalgebra.delta(0))
print("full check:", C.check(multiplicative=True).summary())
print("matches its own r:", check_coboundary(C, r).passed)

eq = quasi_triangular_equivalences(C, r)
print("quasi-triangular statements:", eq.as_tuple(),
      "-> agree:", eq.all_agree())
