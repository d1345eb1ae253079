"""
Distribution tables
===================

Sweeps every (c, gamma) and tallies the uniformity of Inv o (0, 1, gamma).
Degrees up to 7 take seconds; n=8 takes a few more.
"""

from carlitz_cdu.scan import ScanConfig, run_table

for n in (4, 5, 6):
    print(run_table(ScanConfig(n=n, table_id=1)).to_csv(), end="")

# pairs with value 3, and those certified by the trace conditions
print(run_table(ScanConfig(n=6, table_id=2)).to_json())

# gamma restricted to GF(4), c outside GF(4)
print(run_table(ScanConfig(n=8, table_id=3)).to_json())
