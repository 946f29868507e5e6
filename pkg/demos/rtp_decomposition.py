"""
Recursive tetrational partitioning
==================================

How a number splits into towers of one base, and what the folded
lambda term for that split looks like.
"""

from church_compact import rtp, translate
from church_compact.rtp import count_ops, format_expr, slog, tetration
from church_compact.term import pretty

# %%
# Towers of 2 and the (floor) super-logarithm.
print([tetration(2, i) for i in range(5)])
print([slog(2, n) for n in (1, 2, 15, 16, 200, 65536)])

# %%
# 201 in base 2: a remainder of one and a sum of towers for 200.
d = rtp(201, 2)
print(d.r, format_expr(d.expr), count_ops(d.expr))

# %%
# Every literal becomes the shared variable bound to C(2).
tr = translate(d)
print(pretty(tr.term))
print("size", tr.size, "vs plain", 2 * 201 + 3)

# %%
# Different bases give different shapes and sizes.
for phi in (2, 3, 4, 5, 7, 14):
    d = rtp(201, phi)
    print(phi, d.r, format_expr(d.expr), translate(d).size)
