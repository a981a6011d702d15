"""Run every subcommand on the test data and validate its JSON output against the published schema."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CASES = [
    ("hull", "worked.sys", []),
    ("hull", "worked_supports.json", []),
    ("mixed-volume", "worked_supports.json", []),
    ("mixed-volume", "linear.sys", []),
    ("degree", "worked.sys", ["--direction", "1,1"]),
    ("fill", "worked_supports.json", []),
    ("fill", "linear.sys", ["--from-supports"]),
    ("count-roots", "worked.sys", ["--direction", "1,1"]),
    ("count-roots", "pencil.sys", []),
    ("distinct-roots", "linear.sys", []),
    ("resultant", "worked.sys", []),
    ("coefficients", "worked.sys", []),
    ("product-check", "linear.sys", ["--direction", "1,0"]),
    ("product-check", "worked.sys", []),
    ("diagnose", "pencil.sys", ["--direction", "1,0"]),
    ("diagnose", "worked.sys", []),
    ("gcp", "linear.sys", []),
    ("gcp", "pencil.sys", []),
    ("integer-roots", "circle_hyperbola.sys", []),
    ("integer-roots", "pencil.sys", []),
    ("integer-roots", "circle_hyperbola.sys", ["--max-candidates", "2"]),
    ("oracle-solve", "worked.sys", []),
]

DEF_FOR = {"resultant": "resultant-command"}


def main() -> int:
    tool, schema_path, data = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    failures = 0
    for command, name, extra in CASES:
        proc = subprocess.run([tool, command, str(data / name), *extra], capture_output=True, text=True)
        label = f"{command} {name} {' '.join(extra)}".strip()
        try:
            payload = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            print(f"FAIL {label}: output is not JSON ({exc})")
            failures += 1
            continue
        target = "error" if "error" in payload and len(payload) == 1 else DEF_FOR.get(command, command)
        sub = {"$ref": f"#/$defs/{target}", "$defs": schema["$defs"]}
        try:
            jsonschema.validate(payload, sub)
        except jsonschema.ValidationError as exc:
            print(f"FAIL {label}: {exc.message} at {list(exc.absolute_path)}")
            failures += 1
            continue
        if (target == "error") != (proc.returncode != 0) and command not in ("count-roots", "diagnose"):
            print(f"FAIL {label}: exit code {proc.returncode} inconsistent with payload")
            failures += 1
            continue
        print(f"ok   {label} (exit {proc.returncode})")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
