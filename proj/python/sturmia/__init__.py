"""Sturmian words, Ostrowski numeration and formal intercepts."""

import json

from ._sturmia import (
    SturmiaError,
    characteristic_prefix,
    continuants,
    decode,
    encode,
    repetition_table,
    run,
    torsion_k,
)

__all__ = [
    "SturmiaError",
    "characteristic_prefix",
    "continuants",
    "decode",
    "encode",
    "repetition_table",
    "run",
    "run_json",
    "torsion_k",
]


def run_json(*args):
    code, out, err = run(list(args))
    if code != 0:
        raise SturmiaError(err.strip() or f"exit code {code}")
    return json.loads(out)
