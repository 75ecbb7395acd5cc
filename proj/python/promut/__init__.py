"""Mutation testing for Prolog programs.

Thin wrapper over the C++ core. Programs and test suites are passed as
source text; reports come back as plain dicts with the same shape as the
`promut` command's JSON output.
"""

import json

from promut._promut import SCHEMA_VERSION, PromutError, format_program
from promut import _promut

__all__ = [
    "SCHEMA_VERSION",
    "PromutError",
    "cli",
    "coverage",
    "format_program",
    "operators",
    "run",
    "solve",
]


def operators():
    """(name, label, sensible) for each operator, in catalogue order."""
    return [tuple(row) for row in _promut.operators()]


def solve(program, goal, step_budget=1_000_000):
    return json.loads(_promut.solve_json(program, goal, step_budget))


def run(program, tests, ops="all", jobs=1, step_budget=1_000_000, matrix=False):
    return json.loads(
        _promut.campaign_json(program, tests, ops, jobs, step_budget, matrix))


def coverage(program, tests, step_budget=1_000_000):
    return json.loads(_promut.coverage_json(program, tests, step_budget))


def cli(*args):
    """Runs the command line in-process. Returns (exit_code, stdout, stderr)."""
    return tuple(_promut.cli([str(a) for a in args]))
