"""
Replaying the induction argument
================================

Both sides of the vertical-sum identity obey the Pascal recurrence,
except on the line n = 2k where each picks up an extra 1.  Together with
agreement on the edges k = 0 and k = n this pins the identity down on
every cell.
"""
from pascalsums import sums
from pascalsums.identities import BUILTIN_IDENTITIES
from pascalsums.verifier import check_pascal_recurrence, inductive_proof_check

# Without the +1 on n = 2k the recurrence breaks immediately.
print(check_pascal_recurrence(sums.vertical_partial_sum, 10, on_line_correction=0).summary())
print(check_pascal_recurrence(sums.vertical_partial_sum, 100, on_line_correction=1).summary())
print(check_pascal_recurrence(sums.theorem_rhs, 100, on_line_correction=1).summary())

report = inductive_proof_check(BUILTIN_IDENTITIES["theorem"], 120)
print(report.summary())

# A single wrong residue in the correction table is caught by the base columns.
broken = list(sums.RESIDUE_CORRECTION)
broken[4] = 0
print(inductive_proof_check(BUILTIN_IDENTITIES["theorem"], 30, correction_table=broken).summary())
