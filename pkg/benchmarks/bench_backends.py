"""Compare the compiled kernel against the pure-Python fallback.

Runs each workload in a subprocess with AFFINECRYSTAL_BACKEND pinned, so
both backends are measured inside otherwise identical interpreters:

    python benchmarks/bench_backends.py [--n 4] [--depth 18] [--count-max 24]

Workloads: breadth-first graph generation over the partition model (the
crystal-operator kernel) and exhaustive regularity counting (the hook-scan
kernel).
"""

import argparse
import json
import os
import subprocess
import sys
import time


def measure(n, depth, count_max, repeat):
    import affinecrystal as ac

    a = ac.horizontal_arm(n)
    results = {"backend": ac.backend_name()}

    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        g = ac.generate_graph("partition", n, depth, a)
        best = min(best, time.perf_counter() - t0)
    results["generate"] = best
    results["vertices"] = len(g.vertices)

    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        counts = ac.count_regular(n, a, count_max)
        best = min(best, time.perf_counter() - t0)
    results["count"] = best
    results["count_tail"] = counts[-1]
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--depth", type=int, default=24)
    parser.add_argument("--count-max", type=int, default=30)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.worker:
        print(json.dumps(measure(args.n, args.depth, args.count_max, args.repeat)))
        return

    import affinecrystal as ac

    rows = []
    for backend in ac.available_backends():
        env = dict(os.environ, AFFINECRYSTAL_BACKEND=backend)
        cmd = [
            sys.executable, os.path.abspath(__file__), "--worker",
            "--n", str(args.n), "--depth", str(args.depth),
            "--count-max", str(args.count_max), "--repeat", str(args.repeat),
        ]
        out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
        rows.append(json.loads(out.stdout))

    print(
        f"partition model, n={args.n}: graph to depth {args.depth} "
        f"({rows[0]['vertices']} vertices), counts to size {args.count_max}"
    )
    print(f"{'backend':<10} {'generate':>12} {'count':>12}")
    for row in rows:
        print(f"{row['backend']:<10} {row['generate']:>11.3f}s {row['count']:>11.3f}s")
    if len(rows) == 2:
        base = {row["backend"]: row for row in rows}
        if {"python", "cython"} <= base.keys():
            for key in ("generate", "count"):
                ratio = base["python"][key] / base["cython"][key]
                print(f"cython speedup on {key}: {ratio:.1f}x")


if __name__ == "__main__":
    main()
