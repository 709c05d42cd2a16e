"""Extremal sweeps: which structures pin the statistics at each order.

Each verifier recomputes everything from the equation engine across a
complete catalog and reports Verified, CounterexampleFound, or Skipped.
"""

from semlat import (
    find_extremal,
    make_fan,
    profile,
    verify_empty_bucket_dominance,
    verify_first_kind_max,
    verify_inconsistent_bounds,
    verify_unique_coatom_minimum,
)
from semlat.landmarks import landmark_report, spire5

# A full statistics record for one structure.
rec = profile(make_fan(6))
print(f"fan6: sigma={rec.sigma} sigmaCov1={rec.sigma_cov1}"
      f" cov1={rec.cov1_vector} inconsistent={dict(rec.inconsistent_count)}")

# The chain minimizes and the fan maximizes inconsistent counts.
report = verify_inconsistent_bounds((4, 7), m=1)
print(f"inconsistent-count bounds: {report.status}")
for line in report.details:
    print(" ", line)

# The fan maximizes the first-kind solution total.
print("first-kind maximum:", verify_first_kind_max((4, 8)).status)

# The empty solution set is a weakly largest bucket from order 6 on.
print("empty-bucket dominance:", verify_empty_bucket_dominance((6, 7)).status)

# Minimizers of the full solution total keep having a single coatom.
report = verify_unique_coatom_minimum((4, 9))
print(f"unique-coatom minimum: {report.status}")
for line in report.details:
    print(" ", line)

# Ask directly for the extremal structures at order 5.
value, entries = find_extremal(5, "sigma", "min")
print(f"order-5 sigma minimum {value}, attained by {entries[0].hex_key}")
print("that is the spire:",
      entries[0].hex_key == profile(spire5()).canonical_key)

# The frozen order-5 comparison, recomputed end to end.
lines, ok = landmark_report()
print("\n".join(lines))
print("landmarks ok:", ok)
