"""
Checking every identity
=======================

Runs the whole registry at a small size and prints a one-line verdict per
identity.  Raise ``n_max`` for a more thorough (and slower) run.
"""

import sys

from bperm.identities import Params, verify_all

params = Params(n_max=4)
failures = 0
for report in verify_all(params):
    failures += not report.passed
    print(f"{report.identity:>7}  {report.status}  {report.elapsed:6.2f}s  {report.description}")
    if report.witness:
        print("         ", report.witness)

sys.exit(1 if failures else 0)
