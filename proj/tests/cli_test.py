#!/usr/bin/env python3
# Copyright 2026 The jacsyz Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#                 http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the jacsyz command line: exit codes, outputs,
JSON schemas and byte-for-byte reproducibility."""

import argparse
import json
import os
import re
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

FAILURES = []


def check(cond, what):
    if not cond:
        FAILURES.append(what)
        print("FAIL", what)


def run(args, env=None, stdin=None):
    full_env = dict(os.environ)
    for key in ("JACSYZ_PRIME", "JACSYZ_SEED"):
        full_env.pop(key, None)
    full_env.update(env or {})
    p = subprocess.run([CLI] + args, capture_output=True, text=True, env=full_env, timeout=600)
    return p.returncode, p.stdout, p.stderr


def validator(name):
    resources = []
    for fn in os.listdir(SCHEMA_DIR):
        with open(os.path.join(SCHEMA_DIR, fn)) as fh:
            doc = json.load(fh)
        resources.append((doc["$id"], Resource.from_contents(doc)))
        resources.append((fn, Resource.from_contents(doc)))
    with open(os.path.join(SCHEMA_DIR, name)) as fh:
        schema = json.load(fh)
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema, registry=Registry().with_resources(resources))


def valid(v, doc, what):
    errors = sorted(v.iter_errors(doc), key=lambda e: list(e.path))
    for e in errors[:3]:
        print("  schema:", list(e.path), e.message)
    check(not errors, what)


def expand_cube(coeffs):
    """Coefficients of (sum coeffs t^i)^3."""
    sq = [0] * (2 * len(coeffs) - 1)
    for i, a in enumerate(coeffs):
        for j, b in enumerate(coeffs):
            sq[i + j] += a * b
    cube = [0] * (len(sq) + len(coeffs) - 1)
    for i, a in enumerate(sq):
        for j, b in enumerate(coeffs):
            cube[i + j] += a * b
    return cube


def registry_expression(entry_id):
    with open(REGISTRY) as fh:
        for e in json.load(fh)["entries"]:
            if e["id"] == entry_id:
                return e["expression"]
    raise KeyError(entry_id)


def test_analyze():
    code, out, _ = run(["analyze", "x^5+y^5+z^5"])
    check(code == 0, "analyze fermat quintic exits 0")
    check(re.search(r"^exponents\s+\(4,4,4\)\s+m = 3$", out, re.M), "fermat quintic exponents (4,4,4)")
    check(re.search(r"^tau\s+0$", out, re.M), "fermat quintic tau 0")
    check("SMOOTH" in out, "fermat quintic is SMOOTH")

    code, _, err = run(["analyze", "x^2*y"])
    check(code == 2 and "NOT_REDUCED" in err, "x^2*y exits 2 with NOT_REDUCED")
    code, _, err = run(["analyze", "x^2+y"])
    check(code == 2 and "NOT_HOMOGENEOUS" in err, "inhomogeneous input exits 2")
    code, _, _ = run(["analyze", "x^3+(y"])
    check(code == 2, "parse error exits 2")
    code, _, err = run(["analyze", "x*y*(x-y)"])
    check(code == 2 and "MDR_ZERO" in err, "concurrent lines exit 2")
    code, _, _ = run(["analyze", "x^3+y^3+z^3", "--prime", "1000"])
    check(code == 1, "composite --prime exits 1")
    code, _, _ = run(["analyze", "x^3+y^3+z^3"], env={"JACSYZ_PRIME": "1000"})
    check(code == 1, "composite JACSYZ_PRIME exits 1")
    code, _, _ = run(["frobnicate"])
    check(code == 1, "unknown subcommand exits 1")
    code, _, _ = run(["analyze"])
    check(code == 1, "missing polynomial exits 1")

    code, out, _ = run(["analyze", registry_expression("ex5.1:C''"), "--json"])
    doc = json.loads(out) if code == 0 else {}
    check(doc.get("exponents") == [6, 6, 6, 6] and doc.get("tau") == 56, "degree-10 curve of type (10,6,4) has tau 56")


def test_text_matches_json():
    for poly in ("xyz(x^2+y^2+z^2)", "xyz(x-z)(x-2z)(x-3z)(y-z)(y-2z)(y-3z)(x+y)(x+y-2z)"):
        _, text, _ = run(["analyze", poly])
        _, js, _ = run(["analyze", poly, "--json"])
        doc = json.loads(js)
        exps = "(" + ",".join(map(str, doc["exponents"])) + ")"
        check(re.search(r"^exponents\s+" + re.escape(exps), text, re.M), "text exponents agree: " + poly)
        check(re.search(r"^tau\s+%d$" % doc["tau"], text, re.M), "text tau agrees: " + poly)
        check(re.search(r"^mdr\s+%d$" % doc["mdr"], text, re.M), "text mdr agrees: " + poly)
        eps = "(" + ",".join(map(str, doc["epsilons"])) + ")"
        check(re.search(r"^epsilons\s+" + re.escape(eps), text, re.M), "text epsilons agree: " + poly)


def test_verify():
    code, out, _ = run(["verify-paper", "prop4.2:*"])
    lines = [l for l in out.splitlines() if l.startswith(("MATCH", "MISMATCH"))]
    check(code == 0 and lines and all(l.startswith("MATCH ") for l in lines), "prop4.2:* all MATCH")
    code, out, _ = run(["verify-paper", "ex5.2:C'"])
    check(code == 0 and out.startswith("MISMATCH ex5.2:C'") and "(flagged)" in out,
          "flagged ex5.2:C' mismatch still exits 0")
    code, _, _ = run(["verify-paper", "no-such-entry"])
    check(code == 1, "empty filter exits 1")

    with tempfile.TemporaryDirectory() as tmp:
        bad = os.path.join(tmp, "registry.json")
        with open(bad, "w") as fh:
            json.dump({"version": 1, "entries": [{"id": "wrong", "expression": "x^3+y^3+z^3",
                                                  "source": "test", "expected": {"tau": 5}}]}, fh)
        code, out, _ = run(["verify-paper", "--registry", bad])
        check(code == 3 and "MISMATCH wrong" in out, "unflagged mismatch exits 3")
        with open(bad, "w") as fh:
            fh.write("{ not json")
        code, _, _ = run(["verify-paper", "--registry", bad])
        check(code == 2, "broken registry exits 2")


def test_family():
    _, out, _ = run(["family", "prop4.3", "d=8"])
    check(out.strip() == "x*y*z*(x^4*y+x^3*z^2+z^3*x*y+y^4*z)", "family prop4.3 d=8")
    _, out, _ = run(["family", "fermat", "d=3"])
    check(out.strip() == "x^3+y^3+z^3", "family fermat d=3")
    code, out, _ = run(["family", "thm6.2", "k=4"])
    check(code == 0 and out.strip().count("*(") + 1 == 9, "family thm6.2 k=4 has nine lines")
    code, out, _ = run(["family", "nodal", "d=6"])
    code2, out2, _ = run(["family", "nodal", "d=6"], env={"JACSYZ_SEED": "0"})
    check(code == 0 and out == out2, "nodal default seed is 0")
    code, out, _ = run(["family", "rk6.3", "k=4", "--analyze", "--json"])
    check(code == 0 and json.loads(out)["exponents"] == [5, 5, 5, 6], "family --analyze --json")
    code, _, _ = run(["family", "fermat", "d=1"])
    check(code == 1, "out-of-range family parameter exits 1")
    code, _, _ = run(["family", "fermat", "q=3"])
    check(code == 1, "unknown family parameter exits 1")
    code, out, _ = run(["family", "--list"])
    check(code == 0 and "thm6.2" in out, "family --list")


def test_hilbert():
    _, out, _ = run(["hilbert", "x^4+y^4+z^4", "--json"])
    rows = json.loads(out)["hilbert"]["rows"]
    expected = expand_cube([1, 1, 1])
    got = [r["milnor"] for r in rows[: len(expected) + 2]]
    check(got == expected + [0, 0], "fermat quartic Milnor dims are (1+t+t^2)^3")
    _, out, _ = run(["hilbert", "xyz(x^2+y^2+z^2)"])
    row = re.search(r"^\s*10\s+(\d+)", out, re.M)
    check(row and row.group(1) == "9", "prop4.2 d=5 row k=10 shows 9")
    check(re.search(r"^\s*0\s+1\s", out, re.M), "k=0 row is 1")


def test_schemas():
    report = validator("report.schema.json")
    for args in (["x^5+y^5+z^5"], ["xyz(x^2+y^2+z^2)", "--saturation"], ["xyz(x+y+z)", "--timing"],
                 ["xyz(x-z)(x-2z)(x-3z)(y-z)(y-2z)(y-3z)(x+y)(x+y-2z)"], ["x^4+y^4+z^4", "--exact"]):
        code, out, _ = run(["analyze"] + args + ["--json"])
        check(code == 0, "analyze --json exits 0: %s" % args)
        valid(report, json.loads(out), "report schema: %s" % args)
    hilbert = validator("hilbert.schema.json")
    _, out, _ = run(["hilbert", "xyz(x^2+y^2+z^2)", "--saturation", "--json"])
    valid(hilbert, json.loads(out), "hilbert schema")
    verify = validator("verify.schema.json")
    _, out, _ = run(["verify-paper", "ex5.*", "--json"])
    valid(verify, json.loads(out), "verify schema")
    cert = validator("certificate.schema.json")
    with tempfile.TemporaryDirectory() as tmp:
        store = os.path.join(tmp, "certs.jsonl")
        code, out, err = run(["search", "--d", "6", "--r", "4", "--m", "4", "--budget", "40", "--store", store])
        check(code == 0, "search exits 0")
        with open(store) as fh:
            lines = fh.read().splitlines()
        check(lines and lines == out.splitlines(), "store holds exactly the printed certificates")
        for line in lines:
            valid(cert, json.loads(line), "certificate schema")
        code, out2, err2 = run(["search", "--d", "6", "--r", "4", "--m", "4", "--budget", "40", "--store", store])
        with open(store) as fh:
            check(fh.read().splitlines() == lines, "store is not duplicated on rerun")
        check(out2 == out and "(%d already stored)" % len(lines) in err2, "rerun reports stored certificates")
    code, _, _ = run(["search", "--d", "6", "--r", "2", "--m", "4"])
    check(code == 1, "search outside d/2 <= r exits 1")


def test_reproducible():
    for args in (["analyze", "xyz(x+y-z)(x+y+3z)(y+z)(x+5y-z)(7x+y-z)", "--json", "--saturation"],
                 ["family", "nodal", "d=7", "seed=3", "--analyze", "--json"],
                 ["verify-paper", "ex4.*", "--json"]):
        a = run(args)
        b = run(args)
        check(a == b and a[0] == 0, "byte-identical rerun: %s" % " ".join(args[:2]))
    a = run(["analyze", "xyz(x^2+y^2+z^2)", "--json", "--seed", "7"])
    b = run(["analyze", "xyz(x^2+y^2+z^2)", "--json"], env={"JACSYZ_SEED": "7"})
    check(a == b and '"seed": 7' in a[1], "JACSYZ_SEED matches --seed")
    a = run(["verify-paper", "prop4.3:*"], env={"JACSYZ_THREADS": "1"})
    b = run(["verify-paper", "prop4.3:*"], env={"JACSYZ_THREADS": "3"})
    check(a == b, "verify output independent of thread count")


def main():
    global CLI, SCHEMA_DIR, REGISTRY
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--schemas", required=True)
    ap.add_argument("--registry", required=True)
    ap.add_argument("groups", nargs="*")
    ns = ap.parse_args()
    CLI, SCHEMA_DIR, REGISTRY = ns.cli, ns.schemas, ns.registry
    groups = {"analyze": test_analyze, "text_json": test_text_matches_json, "verify": test_verify,
              "family": test_family, "hilbert": test_hilbert, "schemas": test_schemas,
              "reproducible": test_reproducible}
    for name in ns.groups or groups:
        groups[name]()
    if FAILURES:
        print("%d failure(s)" % len(FAILURES))
        return 1
    print("cli: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
