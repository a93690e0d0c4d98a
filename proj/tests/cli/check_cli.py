"""End-to-end checks of the freehedra executable.

usage: check_cli.py <freehedra binary> <schema dir>
"""

import json
import os
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

TOOL = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

registry = Registry()
for p in sorted(SCHEMAS.glob("*.schema.json")):
    doc = json.loads(p.read_text())
    registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))


def validator(name):
    schema = registry.contents(f"urn:freehedra:schema:{name}")
    return jsonschema.Draft202012Validator(schema, registry=registry)


failures = []


def check(cond, what):
    if not cond:
        failures.append(what)
        print(f"FAIL {what}")


def run(args, env=None):
    full_env = dict(os.environ)
    for k in ("FREEHEDRA_MAX_ENUM", "FREEHEDRA_MAX_CERT", "FREEHEDRA_MAX_ASSOC"):
        full_env.pop(k, None)
    if env:
        full_env.update(env)
    p = subprocess.run([TOOL] + args, capture_output=True, env=full_env)
    return p.returncode, p.stdout


# (args, expected exit code, schema name or None)
CASES = [
    (["faces", "--family", "freehedron", "--n", "2", "--format", "json"], 0, "faces"),
    (["faces", "--family", "freehedron", "--n", "1"], 0, None),
    (["faces", "--family", "cube", "--n", "2", "--format", "json"], 0, "faces"),
    (["faces", "--family", "associahedron", "--n", "4", "--format", "json"], 0, "faces"),
    (["check-short", "--family", "freehedron", "--n", "4"], 0, "certificate"),
    (["check-short", "--family", "simplex", "--n", "5"], 0, "certificate"),
    (["check-short", "--family", "associahedron", "--n", "6"], 1, "certificate"),
    (["check-short", "--family", "associahedron", "--n", "6", "--format", "text"], 1, None),
    (["verify-supdim", "--n", "3"], 0, "supdim"),
    (["verify-supdim", "--n", "1"], 0, "supdim"),
    (["verify-supdim", "--n", "4", "--format", "csv"], 0, None),
    (["hilbert", "--family", "freehedron", "--n", "1", "--max-len", "2"], 0, None),
    (["hilbert", "--n", "1", "--max-len", "2", "--format", "json"], 0, "hilbert"),
    (["hilbert", "--n", "2", "--max-len", "2", "--no-repeats", "--color", "10"], 0, None),
    (["residual", "--n", "2", "--max-len", "3", "--format", "json"], 0, "hilbert"),
    (["residual", "--n", "1", "--max-len", "2", "--no-repeats"], 0, None),
    (["lattice", "--family", "freehedron", "--n", "2", "--format", "dot"], 0, None),
    (["lattice", "--n", "2", "--graph", "skeleton"], 0, None),
    (["lattice", "--n", "3", "--format", "json"], 0, "complex"),
    (["audit-chains", "--family", "freehedron", "--n", "3"], 0, "audit"),
    (["audit-chains", "--n", "4", "--format", "text"], 0, None),
    ([], 2, None),
    (["faces"], 2, None),
    (["faces", "--family", "sphere", "--n", "2"], 2, None),
    (["lattice", "--n", "2", "--format", "csv"], 2, None),
    (["verify-supdim", "--family", "cube", "--n", "2"], 2, None),
    (["check-short", "--n", "7"], 3, None),
    (["check-short", "--family", "associahedron", "--n", "7"], 3, None),
    (["faces", "--n", "9"], 3, None),
    (["hilbert", "--n", "1", "--max-len", "9"], 3, None),
]

for args, code, schema in CASES:
    label = " ".join(args) or "(no arguments)"
    rc, out = run(args)
    check(rc == code, f"exit {rc} != {code}: {label}")
    rc2, out2 = run(args)
    check(rc2 == rc and out2 == out, f"output differs between runs: {label}")
    if schema:
        try:
            doc = json.loads(out)
        except json.JSONDecodeError as e:
            check(False, f"not JSON ({e}): {label}")
            continue
        errors = list(validator(schema).iter_errors(doc))
        check(not errors, f"schema {schema}: {label}: {errors[:1]}")

# Record counts and payloads.
_, out = run(["faces", "--family", "freehedron", "--n", "2", "--format", "json"])
check(len(json.loads(out)["faces"]) == 11, "F^2 has 11 face records")
_, out = run(["faces", "--family", "freehedron", "--n", "1"])
check(len([l for l in out.decode().splitlines() if not l.startswith("#")]) == 3,
      "F^1 has 3 face records")
_, out = run(["faces", "--family", "cube", "--n", "2", "--format", "json"])
check(len(json.loads(out)["faces"]) == 9, "square has 9 face records")
_, out = run(["verify-supdim", "--n", "3"])
check(len(json.loads(out)["faces"]) == 39, "slack table for n = 3 has 39 rows")
_, out = run(["verify-supdim", "--n", "4"])
check(set(json.loads(out)["slack_histogram"]) == {"0", "1"}, "slack values for n = 4 are {0, 1}")
_, out = run(["lattice", "--n", "2", "--format", "dot"])
nodes = [l for l in out.decode().splitlines() if "[label=" in l]
check(len(nodes) == 11, "Hasse diagram of F^2 has 11 nodes")

_, out = run(["hilbert", "--n", "1", "--max-len", "2"])
rows = out.decode().splitlines()
check(rows[0] == "color,word,exponent,coefficient", "hilbert csv header")
edge_rows = sorted(r for r in rows[1:] if r.startswith("2,"))
check(edge_rows == sorted(["2,2,0,1", "2,0,1,1", "2,1,1,1", "2,0 2,1,1", "2,2 1,1,1",
                           "2,0 1,2,1", "2,0 0,2,1", "2,1 1,2,1"]),
      f"interval image at length 2: {edge_rows}")

rc, out = run(["check-short", "--family", "associahedron", "--n", "6"])
doc = json.loads(out)
check(doc["witness"] is not None and doc["witness"]["excess"] <= 0, "associahedron witness")

# Witness consistency: consecutive members ordered, excess recomputed.
w = doc["witness"]
dims = [f["dim"] for f in w["faces"]]
check(w["excess"] == (w["ambient"]["dim"] - 1) - sum(d - 1 for d in dims), "witness excess")

# Round trip through --input with a full complex and with a family selector.
with tempfile.TemporaryDirectory() as tmp:
    cx = pathlib.Path(tmp) / "c.json"
    _, out = run(["lattice", "--n", "3", "--format", "json"])
    cx.write_bytes(out)
    rc, a = run(["check-short", "--input", str(cx)])
    rc2, b = run(["check-short", "--n", "3"])
    check(rc == 0 and a == b, "check-short from complex JSON matches direct run")
    fam = pathlib.Path(tmp) / "f.json"
    fam.write_text('{"family": "cube", "n": 3}')
    check(not list(validator("family").iter_errors(json.loads(fam.read_text()))), "family schema")
    rc, a = run(["faces", "--input", str(fam), "--format", "json"])
    check(rc == 0 and len(json.loads(a)["faces"]) == 27, "faces from family JSON")
    outp = pathlib.Path(tmp) / "o.dot"
    rc, a = run(["lattice", "--n", "2", "--output", str(outp)])
    _, b = run(["lattice", "--n", "2"])
    check(rc == 0 and a == b"" and outp.read_bytes() == b, "--output writes the same bytes")
    bad = pathlib.Path(tmp) / "bad.json"
    bad.write_text("{not json")
    rc, _ = run(["faces", "--input", str(bad)])
    check(rc == 2, "malformed input is a usage error")

# Environment bound overrides.
rc, _ = run(["check-short", "--n", "7"], {"FREEHEDRA_MAX_CERT": "7", "FREEHEDRA_MAX_ENUM": "8"})
check(rc == 0, "FREEHEDRA_MAX_CERT raises the certification bound")
rc, _ = run(["faces", "--n", "3"], {"FREEHEDRA_MAX_ENUM": "2"})
check(rc == 3, "FREEHEDRA_MAX_ENUM lowers the enumeration bound")
rc, _ = run(["faces", "--n", "3"], {"FREEHEDRA_MAX_ENUM": "lots"})
check(rc == 2, "malformed bound is a usage error")
rc, _ = run(["check-short", "--family", "associahedron", "--n", "7"], {"FREEHEDRA_MAX_ASSOC": "7"})
check(rc == 1, "FREEHEDRA_MAX_ASSOC raises the associahedron bound")

if failures:
    print(f"{len(failures)} check(s) failed")
    sys.exit(1)
print("all CLI checks passed")
