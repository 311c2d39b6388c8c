#!/usr/bin/env python3
# The closed-form identity suite, plus moving tables in and out as files.
#
# Each classical function is built twice: from its elementary definition
# and from its per-prime closed form (geometric series, 1/(1-x)^2, ...).
# The suite compares the two tables index by index -- exactly for the
# seven rational identities, within a tolerance for the log-weighted one.

import math
import tempfile
from pathlib import Path

import arithfn as af
from arithfn import io as fnio

N = 5000
sieve = af.build_sieve(N)

report = af.verify_identities(sieve, tol=1e-9)
for line in report.lines():
    print(line)
assert report.all_passed

lam_entry = next(e for e in report.entries if e.name == "Lambda")
print(f"\nvon Mangoldt float check: max deviation {lam_entry.max_dev:.2e} at N={N}")

# u * Lambda rebuilds the logarithm from prime-power weights.
u = af.ArithFn.ones(N, af.COMPLEX)
lam = af.make("mangoldt", sieve, af.COMPLEX)
conv = u * lam
print("(u * Lambda)(5000) =", conv[5000].real, " ln 5000 =", math.log(5000))
assert abs(conv[5000] - math.log(5000)) < 1e-9

# Tables round-trip through CSV and JSON byte-faithfully.
with tempfile.TemporaryDirectory() as tmp:
    phi = af.make("phi", sieve, bound=100)
    csv_path = Path(tmp) / "phi.csv"
    json_path = Path(tmp) / "phi.json"
    fnio.write_csv(phi, csv_path)
    fnio.write_json(phi, json_path)
    print("\nCSV head:")
    print("\n".join(csv_path.read_text().splitlines()[:4]))
    assert fnio.read_csv(csv_path) == phi
    assert fnio.read_json(json_path) == phi

print("\nthe same suite is scriptable:  arithfn verify identities --n 10000 --tol 1e-9")
print("tabulate anything:             arithfn table \"psi(u)\" --n 12")
print("test structure with witnesses: arithfn check additive \"nu\" --n 100000")
