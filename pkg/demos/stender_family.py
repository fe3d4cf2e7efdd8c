# %% [markdown]
# # The quartic family and its twisted forms
#
# The field Q((1+i)(D^4+c)^(1/4)) carries an explicit unit eps. Its powers
# produce the quartic forms F_n, and we solve |F_n(x, y)| <= m for small n.

# %%
from twisted_thue.forms import SearchCaps
from twisted_thue.stender import (
    StenderParams, check_printed_b3, coeffs_by_recurrence, coeffs_direct,
    family_form, solve_family, unit_epsilon,
)

p = StenderParams(2, 1)
eps = unit_epsilon(p)
print("eps =", eps, " norm:", eps.norm())

# %% [markdown]
# The coefficients of the characteristic polynomial of eps^n come from exact
# recurrences. They are cross-checked by rounding symmetric functions of
# certified roots.

# %%
for n in range(-3, 5):
    rec = coeffs_by_recurrence(p, n)
    assert rec == coeffs_direct(p, n)
    print(n, rec.polynomial())

# %% [markdown]
# The closed form for b_3 with coefficient 1768 on D^8 c disagrees with both
# routes. The value 768 agrees.

# %%
for D, c in [(2, 1), (2, -1), (3, 1), (3, -1)]:
    r = check_printed_b3(StenderParams(D, c))
    print((D, c), "1768 form:", r["printed"], " direct:", r["direct"], " 768 form holds:", r["corrected_holds"])

# %%
print("F_1 =", family_form(p, 1).coeffs)

res = solve_family(p, 200, SearchCaps(xy=30, A=4))
print(res.completeness, "skipped n =", res.skipped)
for s in res.solutions:
    print(f"n={s.epsilon.exponents[0]:3d}  x={s.x:3d}  y={s.y:3d}  F={s.value}")
