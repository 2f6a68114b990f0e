"""Runs each CLI subcommand with --format json and validates the output."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

RUNS = [
    ("rates", ["--preset", "fig2"], "rates.json"),
    ("rates", ["--weights", "0.2,0.4,0.4", "--c", "3", "--n", "2"], "rates.json"),
    ("pipeline", ["--preset", "fig6", "--sigma", "0.02", "--seed", "7"], "pipeline.json"),
    ("pipeline", ["--preset", "fig5", "--mode", "synthetic-experiment"], "pipeline.json"),
    ("tomo-demo", ["--preset", "fig3", "--t", "0.4"], "tomo.json"),
]


def main() -> int:
    cli, schema_path, out_root = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for i, (cmd, args, name) in enumerate(RUNS):
        out = out_root / f"{i}_{cmd}"
        proc = subprocess.run([cli, cmd, *args, "--format", "json", "--out", str(out)],
                              capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {cmd} {args}: exit {proc.returncode}\n{proc.stderr}")
            failures += 1
            continue
        doc = json.loads((out / name).read_text())
        errors = sorted(validator.iter_errors(doc), key=str)
        if errors:
            print(f"FAIL {cmd} {args}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {cmd} {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
