#!/usr/bin/env python3
"""Drive the command-line front door end to end, in a temp directory.

Shows the deterministic verify report, a trace computation, an error
path with its stable code, and the chart-swap round trip producing
byte-identical files.
"""

import json
import pathlib
import subprocess
import sys
import tempfile

from fricke import Mat2, WildRep, wild_traces
from fricke.scalars import EXACT

g = EXACT.scalar


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "fricke.cli", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout.strip()


def main():
    rep = WildRep.from_matrices(Mat2.identity(EXACT), g(1), g(1), g(2))
    point = wild_traces(rep)
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)

        print("$ fricke verify --suite full-squared --count 50 --seed 9")
        code, out = run("verify", "--suite", "full-squared",
                        "--count", "50", "--seed", "9")
        print("  exit %d, ok=%s" % (code, json.loads(out)["ok"]))

        src = tmp / "rep.json"
        src.write_text(json.dumps(rep.to_json()))
        print("$ fricke traces --in rep.json")
        code, out = run("traces", "--in", str(src))
        print("  exit %d, point: %s" % (code, out))

        bad = tmp / "bad.json"
        data = point.to_json()
        data["s"] = "2"
        data["x"] = "2"
        data["t1"] = "5/2"
        bad.write_text(json.dumps(data))
        print("$ fricke reconstruct --in boundary.json")
        code, out = run("reconstruct", "--in", str(bad))
        print("  exit %d, error: %s" % (code, json.loads(out)["error"]))

        pt = tmp / "p.json"
        mid = tmp / "mid.json"
        back = tmp / "back.json"
        pt.write_text(json.dumps(point.to_json()))
        run("chart-swap", "--in", str(pt), "--out", str(mid))
        run("chart-swap", "--in", str(mid), "--out", str(back))
        canonical = json.dumps(point.to_json(), sort_keys=True,
                               separators=(",", ":")) + "\n"
        print("$ fricke chart-swap twice")
        print("  round trip byte-identical: %s"
              % (back.read_text() == canonical))

        orbit_csv = tmp / "orbit.csv"
        code, out = run("orbit", "--in", str(pt), "--word", "full full",
                        "--steps", "2", "--out", str(orbit_csv))
        print("$ fricke orbit --word 'full full' --steps 2")
        print("  summary: %s" % out)
        print("  csv rows: %d" % (len(orbit_csv.read_text().splitlines()) - 1))


if __name__ == "__main__":
    main()
