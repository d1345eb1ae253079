"""
Checking closed forms against brute force
=========================================

Each suite yields verdicts pairing a prediction with an exhaustive count.
"""

from collections import Counter

from carlitz_cdu.scan import run_verify

for suite in ("inv", "cdu5", "cf4", "rank_bound", "outside_pa"):
    verdicts = run_verify(suite, [4, 5, 6])
    tally = Counter("PASS" if v.passed else "FAIL" for v in verdicts)
    print(f"{suite:12s} {dict(tally)}")

# one verdict line in full
print(run_verify("cf4", [6])[0].line())

# the exact-count claim for shifts in GF(4) does not hold; a few failures
failures = [v for v in run_verify("af4", [4]) if not v.passed]
print(len(failures), "failing verdicts, e.g.")
for v in failures[:3]:
    print(v.line())
