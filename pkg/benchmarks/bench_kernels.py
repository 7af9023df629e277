"""Time the integer kernels under numba and under the plain-Python fallback.

Each backend runs in its own interpreter because the switch is read at import.
Usage: python benchmarks/bench_kernels.py [--repeat 3] [--max-n 12] [--json]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from hodgeint import _jit, kernels
from hodgeint.partitions import enumerate_partitions

repeat, max_n = int(sys.argv[1]), int(sys.argv[2])


def table_inputs(n):
    parts = enumerate_partitions(n)
    arr = np.zeros((len(parts), n), dtype=np.int64)
    lengths = np.zeros(len(parts), dtype=np.int64)
    for i, p in enumerate(parts):
        arr[i, :len(p)] = p
        lengths[i] = len(p)
    return arr, lengths


def best(fn):
    fn()  # warm-up, includes compilation
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


rows = []
for n in (8, 10, max_n):
    arr, lengths = table_inputs(n)
    secs, table = best(lambda: kernels.character_table(arr, lengths))
    rows.append({"case": f"character_table n={n}", "seconds": secs, "checksum": int(np.abs(table).sum())})
for d, r in ((4, 8), (5, 6)):
    ident = np.arange(d, dtype=np.int64)
    target = np.zeros(d, dtype=np.int64)
    target[0] = d
    secs, count = best(lambda: kernels.count_factorizations(ident, target, r, transitive=True))
    rows.append({"case": f"transitive count d={d} r={r}", "seconds": secs, "checksum": int(count)})
print(json.dumps({"backend": _jit.backend_name(), "rows": rows}))
"""


def run_backend(disable: bool, repeat: int, max_n: int) -> dict:
    env = dict(os.environ, HODGE_DISABLE_NUMBA="1" if disable else "0")
    proc = subprocess.run([sys.executable, "-c", WORKER, str(repeat), str(max_n)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    fast = run_backend(False, args.repeat, args.max_n)
    slow = run_backend(True, args.repeat, args.max_n)
    rows = []
    for a, b in zip(fast["rows"], slow["rows"]):
        if a["checksum"] != b["checksum"]:
            print(f"backend mismatch on {a['case']}: {a['checksum']} vs {b['checksum']}", file=sys.stderr)
            return 1
        rows.append({"case": a["case"], "numba_s": a["seconds"], "python_s": b["seconds"],
                     "speedup": b["seconds"] / a["seconds"] if a["seconds"] else float("inf")})
    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"{'case':34s} {'numba [s]':>11s} {'python [s]':>11s} {'speedup':>9s}")
    for r in rows:
        print(f"{r['case']:34s} {r['numba_s']:11.5f} {r['python_s']:11.5f} {r['speedup']:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
