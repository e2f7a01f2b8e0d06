"""Exact rational checks on reductive homogeneous spaces, backed by the C++ core."""

import json
from fractions import Fraction

from ._gonil import InputError, Space
from . import _gonil

__all__ = ["InputError", "Space", "load", "run", "solve_alpha", "go_check", "verify", "check_skew",
           "classify", "signature"]


def _q(x):
    if isinstance(x, float):
        raise TypeError("floats forbidden; use Fraction or a 'p/q' string")
    return str(Fraction(x)) if not isinstance(x, str) else x


def _rows(m):
    return [[_q(x) for x in row] for row in m]


def load(path):
    return Space.from_file(str(path))


def run(*args):
    """Run a CLI command line; returns (exit_code, report_dict_or_None, stderr)."""
    code, out, err = _gonil.run([str(a) for a in args])
    try:
        report = json.loads(out) if out.strip() else None
    except ValueError:
        report = None
    return code, report, err


def solve_alpha(space, xi):
    return json.loads(space.solve_alpha([_q(x) for x in xi]))


def go_check(space, samples=100, seed=0):
    return json.loads(space.go_check(samples, seed))


def verify(space, which="thm41"):
    return json.loads(space.verify_thm41() if which == "thm41" else space.verify_thm42())


def check_skew(b, g):
    return _gonil.check_skew(_rows(b), _rows(g))


def classify(b, g):
    return json.loads(_gonil.classify(_rows(b), _rows(g)))


def signature(g):
    s = json.loads(_gonil.signature(_rows(g)))
    return s["positive"], s["negative"], s["null"]
