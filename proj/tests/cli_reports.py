#!/usr/bin/env python3
# Runs the CLI over the fixtures: exit codes, schema validity, byte-stable reruns.
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

cli, root = sys.argv[1], Path(sys.argv[2])
fx = root / "fixtures"
schema = json.loads((root / "schema" / "report.schema.json").read_text())
validator = jsonschema.Draft202012Validator(schema)
failures = []


def run(args, expect, stable=True):
    first = subprocess.run([cli, *args], capture_output=True, text=True)
    name = " ".join(args)
    if first.returncode != expect:
        failures.append(f"{name}: exit {first.returncode}, expected {expect}\n{first.stderr}")
        return None
    if expect == 1:
        if first.stdout:
            failures.append(f"{name}: input error wrote a report")
        return None
    report = json.loads(first.stdout)
    errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
    for e in errors[:3]:
        failures.append(f"{name}: schema: {list(e.path)}: {e.message[:200]}")
    if report["exit_code"] != expect:
        failures.append(f"{name}: exit_code field {report['exit_code']}")
    if stable and subprocess.run([cli, *args], capture_output=True, text=True).stdout != first.stdout:
        failures.append(f"{name}: report differs between runs")
    print(f"ok  {name}")
    return report


for spec in sorted((fx / "families").glob("*.json")):
    run(["family", str(spec)], 0)

r = run(["check", str(fx / "curves/thm3_quartic.json"), "--point", "0:1:0"], 0)
if r and (r["report"]["verdict"], r["report"]["point_class"], r["report"]["group"]["order"]) != ("certified_galois", "inner", 3):
    failures.append("check thm3_quartic (0:1:0): expected certified inner order 3")
r = run(["check", str(fx / "curves/thm3_cubic.json"), "--point", "1:0:0", "--strategy", "deck",
         "--param", "8", "t^3+9*t", "t^2+1"], 0)
if r and (r["report"]["method"], r["report"]["group"]["order"]) != ("deck", 3):
    failures.append("check thm3_cubic (1:0:0): expected deck group of order 3")
r = run(["check", str(fx / "curves/thm2_tame_d4_c1.json"), "--point", "0:0:1", "--seed", "7"], 0)
if r and r["report"]["verdict"] != "certified_not_galois":
    failures.append("check thm2_tame_d4_c1 (0:0:1): expected certified_not_galois")
run(["pair", str(fx / "curves/thm3_cubic.json"), "--inner", "0:1:0", "--outer", "1:0:0",
     "--param", "8", "t^3+9*t", "t^2+1"], 0)
r = run(["embed", str(fx / "groups/a4_f13.json"), "--point", "1:9"], 0)
if r and r["result"]["joint_descriptor"]["tag"] != "a4":
    failures.append("embed a4_f13: expected joint a4")
run(["embed", str(fx / "groups/s3_f13.json"), "--point", "1:1"], 0)
run(["embed", str(fx / "groups/a4_f13.json"), "--point", "0"], 2)
for d, f in [("3", "13"), ("4", "13"), ("3", "7"), ("4", "7")]:
    run(["branch", "--d", d, "--field", f], 0)
run(["branch", "--d", "3", "--field", "3"], 2)

with tempfile.TemporaryDirectory() as tmp:
    garbage = Path(tmp) / "garbage.json"
    garbage.write_text('{"field": "13", "affine_poly": ')
    run(["check", str(garbage), "--point", "0:1:0"], 1)
    badpoly = Path(tmp) / "badpoly.json"
    badpoly.write_text('{"field": "13", "affine_poly": "x^^2"}')
    run(["check", str(badpoly), "--point", "0:1:0"], 1)
    badkey = Path(tmp) / "badkey.json"
    badkey.write_text('{"family": "thm3_cubic", "field": "13", "colour": 1}')
    run(["family", str(badkey)], 1)
    out = Path(tmp) / "out.json"
    res = subprocess.run([cli, "-o", str(out), "branch", "--d", "3", "--field", "13"], capture_output=True, text=True)
    if res.returncode != 0 or res.stdout or json.loads(out.read_text())["certificate"]["c"]["signed"] != -2:
        failures.append("-o: expected the report in the file only")
run(["check", str(fx / "curves/thm3_cubic.json"), "--point", "1:2"], 1)
run(["branch", "--d", "5", "--field", "13"], 1)
run(["nonsense"], 1)

for f in failures:
    print("FAIL", f)
sys.exit(1 if failures else 0)
