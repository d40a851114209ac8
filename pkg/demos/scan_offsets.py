"""Search for progressions a n + b on which v0 vanishes mod m, then check them further.

Scans only find candidates over a finite range, so every hit is reported as
unproven. Extending the range is a cheap way to weed out accidents.
"""

import sys

from mocktheta.congruence import ZERO, CongruenceClaim, check_claim, scan_progression

cases = [(416, 13), (160, 25), (40, 40), (40, 20)]
if len(sys.argv) == 3:
    cases = [(int(sys.argv[1]), int(sys.argv[2]))]

for a, m in cases:
    hits = scan_progression(a, m, 30)
    print(f"v0({a}n+b) = 0 mod {m} for n<30: b in {hits} (unproven)")
    for b in hits:
        longer = check_claim(CongruenceClaim(a, b, m, ZERO, 120))
        note = "still holds" if longer.passed else f"breaks at n={longer.first_failure.n}"
        print(f"    b={b}: n<120 {note}")
