"""
Sizes against the binary baseline
=================================

A desk-scale run of the size experiment, with the cumulative curve
printed at a few checkpoints instead of plotted.
"""

import sys

from church_compact.bench import csv_text, run_bench

stop = int(sys.argv[1]) if len(sys.argv) > 1 else 3000

# %%
rows, summary = run_bench(1, stop)
print(summary.report())

# %%
# Where does the compacted term beat the binary one, by magnitude of n?
for lo, hi in ((1, 100), (100, 1000), (1000, 10000)):
    window = [r for r in rows if lo <= r.n < hi]
    if window:
        wins = sum(r.rtp_recursive_size <= r.binary_size for r in window)
        print(f"{lo:>5}..{hi:<5} {wins}/{len(window)}")

# %%
# Cumulative curve at checkpoints.
series = summary.cumulative_avg_ratio_series
for n in (10, 100, 1000, 2000, stop):
    if n <= stop:
        print(n, round(float(series[n - 1]), 4))

# %%
print(csv_text(rows[:5]), end="")
