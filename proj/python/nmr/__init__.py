"""Python bindings for the nmr nonmonotonic reasoning solver."""

import json

from ._pynmr import (
    ParseError,
    ResourceCapError,
    reiter_text,
    run_check,
    run_solve,
    run_translate,
    solve_text,
)


class NmrError(RuntimeError):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def solve(path, semantics="wf", truth="kleene", logic=None, trace=False):
    """Solve a .ael or .dt file and return the decoded JSON report."""
    code, out, err = run_solve(path, semantics, truth, logic, True, trace)
    if code != 0:
        raise NmrError(code, err.strip())
    return json.loads(out)


def translate(path):
    """Konolige translation of a .dt file as .ael text."""
    code, out, err = run_translate(path)
    if code != 0:
        raise NmrError(code, err.strip())
    return out


def check(path, truth="kleene", logic=None):
    """Run the oracle comparison; returns (exit code, report text)."""
    code, out, _ = run_check(path, truth, logic)
    return code, out


__all__ = [
    "NmrError",
    "ParseError",
    "ResourceCapError",
    "check",
    "reiter_text",
    "run_check",
    "run_solve",
    "run_translate",
    "solve",
    "solve_text",
    "translate",
]
