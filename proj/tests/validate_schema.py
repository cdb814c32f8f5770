#!/usr/bin/env python3
"""Validates a descent3 CLI report (stdin) against the shipped JSON schema.

For main-theorem reports the results payload is additionally checked against
the detailed sub-schema.
"""

import json
import sys
from pathlib import Path

import jsonschema

schema_path = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("docs/report.schema.json")
schema = json.loads(schema_path.read_text())
payload = json.load(sys.stdin)

jsonschema.validate(payload, schema)
if payload["command"] == "main-theorem":
    detailed = dict(schema["definitions"]["main_theorem_results"])
    detailed["definitions"] = schema["definitions"]
    jsonschema.validate(payload["results"], detailed)
print("schema: OK")
