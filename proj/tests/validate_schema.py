"""Runs the CLI on every bundled mapping and validates the JSON reports."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, data_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for mapping in sorted(data_dir.glob("*.map")):
        for command in ("analyze", "stratify"):
            out = subprocess.run([cli, command, str(mapping), "-E", "2"], capture_output=True, text=True, check=True)
            errors = sorted(validator.iter_errors(json.loads(out.stdout)), key=lambda e: list(e.path))
            for error in errors:
                print(f"{mapping.name} {command}: {list(error.path)}: {error.message}")
            failures += len(errors)
            print(f"{mapping.name} {command}: {'ok' if not errors else 'invalid'}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
