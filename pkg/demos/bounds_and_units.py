# %% [markdown]
# # Unit constants and the explicit bound chain
#
# Start with a rank-2 field: X^5 - X - 1 has one real root, and alpha, alpha - 1
# are independent units.

# %%
from twisted_thue.algnum import NumberField
from twisted_thue.diophantine.bounds import MatveevProvider, TableProvider, compose_bounds
from twisted_thue.forms import twist
from twisted_thue.heights import abs_log_height
from twisted_thue.stender import StenderParams, stender_unit_basis
from twisted_thue.units import (
    ExponentVector, UnitBasis, embedding_lemma_constant, house_bound_constant, reduce_by_units,
)

K = NumberField([1, 0, 0, 0, -1, -1])
a = K.gen
B = UnitBasis(K, [a, a - 1])
print("signature", B.embeddings.signature, " regulator", float(B.regulator))
print("c1 =", float(house_bound_constant(B)), " kappa4 =", float(embedding_lemma_constant(B)))

# %% [markdown]
# Twisting alpha = 2 + alpha^2 by units gives a family of quintic forms.

# %%
alpha = K.element([2, 0, 1, 0, 0])
for e in [(0, 0), (1, 0), (0, 1), (2, -1)]:
    print(e, twist(alpha, ExponentVector(e), B).coeffs)

# %%
gamma = a ** 9 * (a - 1) ** -5 * (a + 3)
red = reduce_by_units(gamma, B, abs(gamma.norm()))
print("reduction exponents", red.exponents.exponents, " h(rho) =", float(abs_log_height(red.rho).value))

# %% [markdown]
# On the quartic field the whole constant chain runs. The default lower bound for
# linear forms in logarithms is far from sharp, so the exponent bound is
# astronomically large. A table of sharper constants shrinks it.

# %%
F, U = stender_unit_basis(StenderParams(2, 1))
for m in (2, 10, 100):
    rep = compose_bounds(F, U, F.gen, m, MatveevProvider())
    print(m, "A_bound %.3e" % float(rep.A_bound), " log xy bound %.3e" % float(rep.solution_box["log_xy_bound"]))

sharp = compose_bounds(F, U, F.gen, 10, TableProvider({"3,12": 1e-6, "3,24": 1e-6}))
print("with table constants:", float(sharp.A_bound))
