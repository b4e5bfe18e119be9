"""Exit codes and output formats of the command line tool.

Usage: python3 cli_contract.py /path/to/instanton-zeta
"""

import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

EXE = sys.argv[1]
failures = []


def run(*args, env=None):
    p = subprocess.run([EXE, *args], capture_output=True, text=True, env=env, timeout=600)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + ("" if cond else f"  {detail}"))
    if not cond:
        failures.append(name)


def exit_code(name, want, *args):
    code, out, err = run(*args)
    check(f"{name}: exit {want}", code == want, f"got {code}; stderr: {err.strip()[:300]}")
    return out


# verify
out = exit_code("verify all at order 20", 0, "verify", "--suite", "all", "--order", "20", "--format", "json")
doc = json.loads(out)
check("verify json passed flag", doc["passed"] is True)
check("verify json lists every suite", len(doc["suites"]) == 9, str(len(doc["suites"])))
check(
    "verify json items carry exponents as strings",
    all(isinstance(i["checked_to"], str) for s in doc["suites"] for i in s["items"]),
)
exit_code("verify wall-oracle at order 6", 0, "verify", "--suite", "wall-oracle", "--order", "6")
for fmt in ("json", "csv", "text"):
    exit_code(f"verify negative order ({fmt})", 2, "verify", "--order", "-1", "--format", fmt)
exit_code("verify unknown suite", 2, "verify", "--suite", "nope")
exit_code("verify oracle order above order", 2, "verify", "--order", "4", "--oracle-order", "6")
out = exit_code("verify csv", 0, "verify", "--suite", "identities", "--order", "8", "--format", "csv")
rows = list(csv.DictReader(io.StringIO(out)))
check("verify csv header and rows", rows and rows[0].keys() >= {"suite", "name", "pass", "checked_to"})

# threads do not change the output order
env1 = {"INSTANTON_ZETA_THREADS": "1"}
env4 = {"INSTANTON_ZETA_THREADS": "4"}
a = run("verify", "--suite", "all", "--order", "8", "--format", "csv", env=env1)[1]
b = run("verify", "--suite", "all", "--order", "8", "--format", "csv", env=env4)[1]
strip = lambda s: [",".join(r[:4]) for r in csv.reader(io.StringIO(s))]
check("deterministic order across thread counts", strip(a) == strip(b))

# table
out = exit_code("table odd json", 0, "table", "--class", "odd", "--max-delta", "7/2", "--format", "json")
t = json.loads(out)
deltas = [r["delta"] for r in t["rows"]]
check("odd rows on the half-integer grid", deltas == ["1/2", "3/2", "5/2", "7/2"], str(deltas))
check("odd first row euler 0, dim -1", t["rows"][0]["euler"] == "0" and t["rows"][0]["dim"] == -1)
check(
    "betti arrays are palindromes summing to euler",
    all(r["betti"] == r["betti"][::-1] and Fraction(sum(r["betti"])) == Fraction(r["euler"]) for r in t["rows"]),
)
out = exit_code("table v0 json", 0, "table", "--class", "v0", "--max-delta", "6", "--format", "json")
t = json.loads(out)
check(
    "v0 even rows singular",
    all(r["singular"] == (Fraction(r["delta"]).denominator == 1 and Fraction(r["delta"]) % 2 == 0) for r in t["rows"]),
)
check("fractions are strings", all(isinstance(r["euler"], str) and isinstance(r["delta"], str) for r in t["rows"]))
out = exit_code("table csv", 0, "table", "--class", "even", "--max-delta", "3", "--format", "csv")
check("table csv header", out.splitlines()[0] == "class,delta,dim,euler,betti,singular")
for fmt in ("json", "csv", "text"):
    exit_code(f"table beyond the order ({fmt})", 1, "table", "--class", "odd", "--max-delta", "30", "--order", "20",
              "--format", fmt)
exit_code("table unknown class", 2, "table", "--class", "lambda7")

# eval
out = exit_code("eval exact E2", 0, "eval", "--form", "E2", "--order", "3", "--format", "json")
s = json.loads(out)
coeffs = {x["exponent"]: x["coeff"] for x in s["terms"]}
check("E2 expansion", coeffs == {"0": "1", "1": "-24", "2": "-72", "3": "-96"}, str(coeffs))
out = exit_code("eval theta3 at i", 0, "eval", "--form", "theta3", "--tau", "i", "--digits", "30", "--format", "json")
check("theta3(i)", json.loads(out)["value"].startswith("1.0864348112"), out)
exit_code("eval unknown form", 2, "eval", "--form", "theta9")
exit_code("eval Z_w0 exactly has no rational q-series", 1, "eval", "--form", "Z_w0", "--order", "3")

# sduality
for tau in ("i", "0.3+1.1i"):
    out = exit_code(f"sduality at {tau}", 0, "sduality", "--tau", tau, "--digits", "40", "--format", "json")
    check(f"sduality at {tau} passes", json.loads(out)["pass"] is True, out)
for fmt in ("json", "csv", "text"):
    exit_code(f"sduality on the real axis ({fmt})", 2, "sduality", "--tau", "1.0", "--format", fmt)
exit_code("sduality unparsable tau", 2, "sduality", "--tau", "one")
exit_code("sduality digits below 10", 2, "sduality", "--tau", "i", "--digits", "5")
out = exit_code("sduality holomorphic diagnostic", 0, "sduality", "--tau", "i", "--e2", "holomorphic", "--format",
                "json")
check("diagnostic has no verdict", json.loads(out)["pass"] is None)

exit_code("no subcommand", 2)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
