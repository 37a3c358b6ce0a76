"""
Checking identities on a grid
=============================

"""

from leoquat import audit_initial_displays, discrepancy_ledger, lookup, run_all, run_identity, suite_passed

spec = lookup("luc0")
print(spec.formula)
print(run_identity(spec, p_max=6, n_max=200).holds)

reports = run_all(p_max=6, n_max=200)
print(len(reports), "identities, suite passed:", suite_passed(reports))

# two quaternion relations fail in their usual printed form
for entry in discrepancy_ledger(reports):
    ce = entry["counterexample"]
    print(entry["as_printed"], "fails at p=%d n=%d" % (ce["p"], ce["n"]))
    print("   ", entry["corrected_formula"], "holds:", entry["corrected_holds"])

for item in audit_initial_displays(5):
    if not item["agrees"]:
        print(item["item"], item["p"], item["computed"], "vs", item["displayed"])
