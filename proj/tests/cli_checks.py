"""End-to-end checks of the gi binary: schema validity, exit codes,
determinism and script round trips."""

import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

GI = sys.argv[1]
ROOT = Path(sys.argv[2])
SCHEMA = json.loads((ROOT / "schemas" / "report.schema.json").read_text())
SCRIPTS = sorted((ROOT / "scripts").glob("*.gi"))

failures = []


def run(*args, env=None, expect=0):
    e = dict(os.environ)
    e.pop("GI_SEED", None)
    if env:
        e.update(env)
    p = subprocess.run([GI, *args], capture_output=True, text=True, env=e)
    if p.returncode != expect:
        failures.append(f"{args}: exit {p.returncode}, expected {expect}\n{p.stderr}")
    return p


def valid(label, text):
    try:
        doc = json.loads(text)
        jsonschema.validate(doc, SCHEMA)
        return doc
    except Exception as exc:  # noqa: BLE001
        failures.append(f"{label}: {exc}")
        return None


# every JSON output validates
suite = run("--json", "suite")
doc = valid("suite", suite.stdout)
if doc:
    conclusions = {v["conclusion"] for v in doc["verdicts"]}
    if not conclusions <= {"pass", "counterexample-consistent"}:
        failures.append(f"suite conclusions {conclusions}")
    names = [i["name"] for i in doc["instances"]]
    if names != sorted(names):
        failures.append("suite instances not sorted")

for s in SCRIPTS:
    valid(f"run {s.name}", run("--json", "run", str(s)).stdout)
    valid(f"parse {s.name}", run("--json", "parse", str(s)).stdout)

for cmd in (["invariants", "pinch3-qq.A"], ["hilbert", "quadric-gf2.B"], ["betti", "tc-ver3.B"],
            ["kernel", "pinch4-qq"], ["veronese", "trivial-qq.A", "3", "--ambient"],
            ["frobenius", "quadric-gf3.B", "9"], ["check", "dim2", "quadric-gf2"],
            ["check", "mcm-quotient", "trivial-qq"]):
    valid(" ".join(cmd), run("--json", *cmd).stdout)

# the n = 3 pinch point
inv = json.loads(run("--json", "invariants", "pinch3-qq.A").stdout)["results"][0]["report"]
if (inv["a-invariant"], inv["multiplicity"], inv["regularity"]) != (0, 3, 2):
    failures.append(f"pinch point invariants {inv}")
chk = json.loads(run("--json", "check", "dim2", "quadric-gf2").stdout)["verdicts"][0]
if chk["conclusion"] != "pass" or chk["lhs"] != chk["rhs"]:
    failures.append(f"dim2 on the quadric: {chk}")

# determinism, also across thread counts
again = run("--json", "suite")
par = run("--json", "suite", "--parallel", "4")
if suite.stdout != again.stdout or suite.stdout != par.stdout:
    failures.append("suite output differs between runs")

# seeds: flag beats GI_SEED beats the default
if json.loads(run("--json", "suite", env={"GI_SEED": "7"}).stdout)["seed"] != 7:
    failures.append("GI_SEED ignored")
if json.loads(run("--json", "--seed", "9", "suite", env={"GI_SEED": "7"}).stdout)["seed"] != 9:
    failures.append("--seed does not override GI_SEED")

# round trip of the shipped scripts through the canonical printer
with tempfile.TemporaryDirectory() as tmp:
    for s in SCRIPTS:
        first = run("parse", str(s)).stdout
        p = Path(tmp) / s.name
        p.write_text(first)
        if run("parse", str(p)).stdout != first:
            failures.append(f"round trip of {s.name}")
        if run("run", str(s)).stdout != run("run", str(p)).stdout:
            failures.append(f"canonical {s.name} runs differently")

    # diagnostics and exit codes
    bad = Path(tmp) / "bad.gi"
    bad.write_text("ring A over GF(2) vars x:1, y:1;\nideal I in A = z^2 - x*y;\n")
    err = run("--json", "run", str(bad), expect=2)
    d = valid("error document", err.stdout)
    if d and (d["error"]["line"], d["error"]["column"], d["error"]["message"]) != (2, 16, "unknown variable z"):
        failures.append(f"diagnostic {d}")
    for text in ("ring A over GF(4) vars x:1;", "ring A over QQ vars x:0;", "ring A over QQ vars x;\nideal I in A = 2x;",
                 "ring A over QQ vars x;\ncheck sep nothing;", "ring A over QQ vars x\n"):
        bad.write_text(text)
        run("run", str(bad), expect=2)
    # precondition failures exit 2; mathematical failures exit 0
    bad.write_text("ring P over GF(2) vars x:1, y:1;\nring Q over GF(2) vars x:1, y:1, z:1;\n"
                   "ideal C in Q = z^2 - x*y;\nmap f : P -> C = x, y;\ninstance i = (P, C, f);\ncheck dim2 i;\n")
    d = valid("precondition", run("--json", "run", str(bad), expect=2).stdout)
    if d and d["error"]["kind"] != "precondition":
        failures.append(f"precondition kind {d}")
run("check", "sep", "pinch3-qq")
run("check", "dim2", "nowhere", expect=2)
run("frobenius", "quadric-qq.B", "2", expect=2)
run("--seed", "x", "suite", expect=2)

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli checks passed")
