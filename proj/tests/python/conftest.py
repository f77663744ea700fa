import json
import os
import pathlib
import shutil
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "schemas"


def _binary():
    env = os.environ.get("STURMIA_BIN")
    if env:
        return env
    for candidate in (ROOT / "build" / "sturmia", shutil.which("sturmia")):
        if candidate and pathlib.Path(candidate).is_file():
            return str(candidate)
    return None


@pytest.fixture(scope="session")
def cli():
    binary = _binary()
    if binary is None:
        pytest.skip("sturmia binary not built")

    def call(*args, expect=0):
        proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=300)
        assert proc.returncode == expect, proc.stderr
        return proc.stdout

    return call


@pytest.fixture(scope="session")
def validate():
    jsonschema = pytest.importorskip("jsonschema")
    referencing = pytest.importorskip("referencing")
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        resources.append((path.name, referencing.Resource.from_contents(schema)))
    registry = referencing.Registry().with_resources(resources)

    def check(name, instance):
        schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator(schema, registry=registry).validate(instance)

    return check
