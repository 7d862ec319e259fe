#!/usr/bin/env python3
"""Run the CLI on sample inputs and validate every JSON output against docs/schemas."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

ROOT = Path(__file__).resolve().parent.parent
SCHEMAS = ROOT / "docs" / "schemas"
EXAMPLES = ROOT / "docs" / "examples"


def registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        resources.append((path.name, Resource.from_contents(json.loads(path.read_text()))))
    return Registry().with_resources(resources)


def validator(name, reg):
    schema = json.loads((SCHEMAS / name).read_text())
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema, registry=reg)


def run(cli, *args, ok=(0,)):
    proc = subprocess.run([cli, *map(str, args)], capture_output=True, text=True)
    if proc.returncode not in ok:
        raise SystemExit(f"{' '.join(map(str, args))} exited {proc.returncode}: {proc.stderr}")
    return json.loads(proc.stdout)


def main():
    cli = sys.argv[1]
    reg = registry()
    v = {n: validator(n, reg) for n in [p.name for p in SCHEMAS.glob("*.schema.json")]}
    failures = 0

    def check(schema, doc, what):
        nonlocal failures
        errors = list(v[schema].iter_errors(doc))
        for e in errors[:3]:
            print(f"{what}: {e.json_path}: {e.message}")
        failures += bool(errors)

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        for seed in range(1, 6):
            cfg = run(cli, "gen", "--seed", seed, "--bound", 50)
            check("config.schema.json", cfg, f"gen {seed}")
            path = tmp / f"cfg{seed}.json"
            path.write_text(json.dumps(cfg))
            cert = run(cli, "verify", path, "--trace")
            check("theorem_cert.schema.json", cert, f"verify {seed}")
            for color in ("red", "blue"):
                if cert.get(color) is not None:
                    check("transversal_cert.schema.json", cert[color], f"verify {seed} {color}")
        check("config.schema.json", run(cli, "gen", "--seed", 3, "--bound", 1, "--keep-degenerate"), "gen degenerate")
        check("theorem_cert.schema.json", run(cli, "verify", EXAMPLES / "config_collinear.json", "--trace"), "collinear")

        out = tmp / "batch"
        summary = run(cli, "batch", "--n", 8, "--seed", 100, "--bound", 100, "--out", out)
        check("summary.schema.json", summary, "batch summary")
        for f in sorted(out.glob("config_*.json")):
            check("theorem_cert.schema.json", json.loads(f.read_text()), f.name)

    for name in ("lemma_basic.json", "lemma_violated.json", "lemma_pencil.json"):
        instance = json.loads((EXAMPLES / name).read_text())
        check("lemma_instance.schema.json", instance, name)
        check("lemma_verdict.schema.json", run(cli, "lemma", EXAMPLES / name), f"lemma {name}")

    print("schema check:", "FAIL" if failures else "PASS")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
