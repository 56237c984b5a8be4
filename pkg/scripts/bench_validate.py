#!/usr/bin/env python3
"""Run one end-to-end validate and report wall time and peak memory as JSON.

Usage: bench_validate.py FILE [FILE...]
Prints: {"exit_code": ..., "elapsed_s": ..., "peak_mib": ..., "report_bytes": ...}
"""

from __future__ import annotations

import io
import json
import resource
import sys
import time

from skosforge.cli import RunConfig, run


def _peak_kib() -> int:
    peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    if peak > 0:
        return peak
    # some sandboxes zero ru_maxrss; /proc has the high-water mark
    with open("/proc/self/status") as fh:
        for line in fh:
            if line.startswith("VmHWM:"):
                return int(line.split()[1])
    return 0


def main(argv=None) -> int:
    paths = (argv if argv is not None else sys.argv[1:])
    if not paths:
        print("usage: bench_validate.py FILE...", file=sys.stderr)
        return 3
    out = io.StringIO()
    started = time.perf_counter()
    code = run(RunConfig(mode="validate", inputs=list(paths), fmt="json"),
               stdout=out, stderr=sys.stderr)
    elapsed = time.perf_counter() - started
    print(json.dumps({
        "exit_code": code,
        "elapsed_s": round(elapsed, 3),
        "peak_mib": round(_peak_kib() / 1024.0, 1),
        "report_bytes": len(out.getvalue().encode("utf-8")),
    }))
    return 0


if __name__ == "__main__":
    sys.exit(main())
