"""
Choosing the base and compacting recursively
============================================

The best single base for each n, then the nested chain that also
compacts the argument numeral when the chosen base is large.
"""

from church_compact import compact_min, compact_recursive
from church_compact.bench import format_table1
from church_compact.numerals import binary_church
from church_compact.reduce import church_value
from church_compact.term import pretty

# %%
# Small n: the table of plain vs best single-stage sizes.
print(format_table1())

# %%
# Larger n pick larger bases; the argument C(phi*) is then compacted too.
for n in (100, 1000, 10000, 65536):
    best = compact_min(n)
    res = compact_recursive(n)
    chain = [s.phi_star for s in res.stages]
    print(n, best.phi_star, best.size, chain, res.final_size, binary_church(n).size)

# %%
# The chain still decodes to the number it encodes.
res = compact_recursive(10000)
print(church_value(res.final_term))
print(pretty(res.final_term, sugar=True))
