"""
Terms, sizes and normal-order reduction
=======================================

Church numerals in de Bruijn notation, their sizes, and how the
normalizer and the semantic decoder agree on arithmetic terms.
"""

from church_compact import church, normalize, parse, pretty, size
from church_compact.numerals import add_comb, exp_comb, mul_comb
from church_compact.reduce import church_value
from church_compact.term import apply

# %%
# A numeral applies its function n times; the size grows as 2n + 3.
for n in (0, 1, 4, 500):
    print(n, size(church(n)), pretty(church(n)) if n < 5 else "...")

# %%
# Text round trip. Applications are printed left-associated and flattened.
t = parse("λ.λ.(1 (1 (1 0)))")
print(t == church(3), pretty(apply(church(2), church(3)), sugar=True))

# %%
# Arithmetic through the combinators, checked two ways.
two, three = church(2), church(3)
for name, comb in (("add", add_comb()), ("mul", mul_comb()), ("exp", exp_comb())):
    term = apply(comb, two, three)
    out = normalize(term)
    print(name, church_value(term), out.steps, out.term == church(church_value(term)))

# %%
# Fuel keeps divergent terms finite.
omega = parse("(λ.(0 0) λ.(0 0))")
print(normalize(omega, 50))
