"""The exhaustive verification engine and the open-conjecture sweep.

Every theorem the package relies on is rechecked object by object at
desk scale: families against triangle entries, bijectivity with
statistics, algorithm equalities, and the reduced-variation
preservation.  The conjecture sweep compares Arnold numbers with fast
forced-sign Andre counts; it is reported separately because a mismatch
there would be a mathematical finding, not a bug.
"""

from zigzag import check_conjecture, run_checks

print("theorem checks at n <= 7 (unsigned) and n <= 5 (signed):")
for report in run_checks(n_max_a=7, n_max_b=5):
    print(
        f"  {report.status}  {report.check_id:24s}"
        f" {report.counts.get('objects', 0):7d} objects"
        f"  {report.elapsed:6.2f}s"
    )

print("\nconjecture sweep, Arnold numbers vs forced-sign Andre counts:")
for report in check_conjecture(6):
    n = report.params["n"]
    print(f"  {report.status}  n={n}  ({report.counts['compared']} comparisons)")
    if report.counterexample:
        print("    counterexample:", report.counterexample)
