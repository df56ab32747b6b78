"""Dolbeault harmonic (1,1)-forms on left-invariant almost Hermitian 4-manifolds.

Problems are dicts (or JSON text) in the same format the command line reads.
Exact numbers come back as strings such as "-1/2" or "(1/3 + 2*i)".
"""

import json as _json

from . import _invh11
from ._invh11 import ProblemError, __version__

__all__ = [
    "BackendDisagreement",
    "ProblemError",
    "__version__",
    "ak_scan",
    "catalog",
    "catalog_list",
    "cohomology",
    "h11",
    "normalize",
    "sweep",
    "tables",
    "validate",
]


class BackendDisagreement(RuntimeError):
    """Exact and floating backends reached different verdicts; `report` holds both."""

    def __init__(self, report):
        super().__init__(report["backend_disagreement"])
        self.report = report


def _text(problem):
    return problem if isinstance(problem, str) else _json.dumps(problem)


def _checked(result):
    out = _json.loads(result)
    if "backend_disagreement" in out:
        raise BackendDisagreement(out)
    return out


def catalog_list():
    return _json.loads(_invh11.catalog_list())


def catalog(name, **params):
    """Reference data, operator tables and invariant cohomology of a catalog entry."""
    return _json.loads(_invh11.catalog_show(name, _json.dumps(params)))


def normalize(problem):
    """The problem as the tool echoes it; re-parses to the same problem."""
    return _json.loads(_invh11.normalize(_text(problem)))


def validate(problem):
    return _json.loads(_invh11.validate(_text(problem)))


def h11(problem, backend=None, tolerance=None, b_minus=None):
    if b_minus is not None:
        b_minus = str(b_minus)
    return _checked(_invh11.h11(_text(problem), backend, tolerance, b_minus))


def ak_scan(problem):
    return _json.loads(_invh11.ak_scan(_text(problem)))


def cohomology(problem):
    return _json.loads(_invh11.cohomology(_text(problem)))


def tables(problem):
    return _json.loads(_invh11.tables(_text(problem)))


def sweep(problem, backend=None, tolerance=None, threads=0):
    return _checked(_invh11.sweep(_text(problem), backend, tolerance, threads))
