"""Run the CLI with --json and validate every report against the shipped schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema

ROOT = pathlib.Path(__file__).resolve().parents[2]

COMMANDS = [
    ["iota", "Q8"],
    ["iota", "D12", "--formula"],
    ["iota", "E2^3", "--timing"],
    ["iota-hat", "F7"],
    ["iota-hat", "F5"],
    ["iota-hat", "Z12", "--formula"],
    ["maximals", "Q8"],
    ["maximals", "F7"],
    ["frattini", "Z9xE2^2"],
    ["verify", "S7", str(ROOT / "fixtures" / "s7_pair.json")],
    ["verify", "A5", str(ROOT / "fixtures" / "a5_pair.json"), "--inconjugate"],
    ["verify", "F7", str(ROOT / "fixtures" / "f7_pair.json")],
    ["table", "sn", "--max", "9"],
    ["table", "dihedral", "--max", "8"],
    ["table", "dicyclic", "--max", "5"],
    ["table", "frobenius", "--max", "7"],
]


def main() -> int:
    binary = sys.argv[1]
    report_schema = json.loads((ROOT / "schemas" / "report.schema.json").read_text())
    witness_schema = json.loads((ROOT / "schemas" / "witness.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(report_schema)
    jsonschema.Draft202012Validator.check_schema(witness_schema)

    failures = 0
    for fixture in sorted((ROOT / "fixtures").glob("*.json")):
        try:
            jsonschema.validate(json.loads(fixture.read_text()), witness_schema)
        except jsonschema.ValidationError as err:
            print(f"FAIL fixture {fixture.name}: {err.message}")
            failures += 1

    for args in COMMANDS:
        proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True, check=False)
        label = " ".join(args[:2])
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), report_schema)
        except (json.JSONDecodeError, jsonschema.ValidationError) as err:
            print(f"FAIL {label}: {err}")
            failures += 1
            continue
        print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
