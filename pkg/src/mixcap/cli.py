"""Command-line batch verifier."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .suites import FAULTS, SUITES, SuiteSpec, UsageError, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# config-file key -> (argparse dest, converter)
CONFIG_KEYS = {
    "suite": ("suite", str),
    "n": ("n", int),
    "kmax": ("kmax", int),
    "series-order": ("series_order", int),
    "trunc-degree": ("trunc_degree", int),
    "seed": ("seed", int),
    "format": ("format", str),
    "out": ("out", str),
    "fault": ("fault", str),
    "timing": ("timing", lambda v: v.strip().lower() in ("1", "true", "yes")),
}
DEFAULTS = {
    "suite": "all",
    "n": 1,
    "kmax": 3,
    "series_order": 4,
    "trunc_degree": 3,
    "seed": 0,
    "format": "text",
    "out": None,
    "fault": None,
    "timing": False,
}


def read_config(path: str) -> dict:
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        dest, conv = CONFIG_KEYS[key]
        try:
            out[dest] = conv(value)
        except ValueError:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mixcap", description=__doc__)
    p.add_argument("--suite", choices=SUITES + ("all",))
    p.add_argument("--n", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--series-order", type=int, dest="series_order", help="Laurent order K")
    p.add_argument("--trunc-degree", type=int, dest="trunc_degree", help="module truncation height D")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=("json", "text"))
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--config", help="flat key=value file; flags override it")
    p.add_argument("--fault", choices=FAULTS, help="inject a known defect (negative control)")
    p.add_argument("--timing", action="store_true", default=None, help="record elapsed ms per check")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def resolve(args: argparse.Namespace) -> dict:
    opts = dict(DEFAULTS)
    if args.config:
        opts.update(read_config(args.config))
    for key in DEFAULTS:
        v = getattr(args, key, None)
        if v is not None:
            opts[key] = v
    if opts["format"] not in ("json", "text"):
        raise UsageError(f"unknown format {opts['format']!r}")
    return opts


def format_text(d: dict) -> str:
    checks = d["checks"]
    w = max((len(c["name"]) for c in checks), default=4)
    lines = [f"suite {d['suite']}  version {d['version']}"]
    lines.append("params " + " ".join(f"{k}={v}" for k, v in sorted(d["params"].items())))
    for c in checks:
        line = f"{c['name']:<{w}}  {c['status']:<4}  {c['ms']:>7} ms"
        if c["witness"]:
            line += f"  {c['witness']}"
        lines.append(line)
    lines.append(f"overall {d['overall']}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = resolve(args)
        spec = SuiteSpec(
            opts["suite"],
            n=opts["n"],
            kmax=opts["kmax"],
            K=opts["series_order"],
            D=opts["trunc_degree"],
            seed=opts["seed"],
            fault=opts["fault"],
        )
        spec.validate()
    except (UsageError, OSError) as exc:
        print(f"mixcap: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    d = run_suite(spec, timing=opts["timing"]).to_dict()
    text = json.dumps(d, indent=2, sort_keys=False) + "\n" if opts["format"] == "json" else format_text(d)
    if opts["out"]:
        Path(opts["out"]).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS if d["overall"] == "pass" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
