"""Katz-sum identity checks over finite fields F_q with q = 1 mod 4."""

import json

from ._core import DEFAULT_TOL, Context, Field, KatzsumError, verify_json

__all__ = ["DEFAULT_TOL", "Context", "Field", "KatzsumError", "all_passed", "verify", "verify_json"]
__version__ = "0.1.0"


def verify(fields, a="all", suites=("all",), tol=DEFAULT_TOL):
    """Run the verification suites and return the parsed report.

    `fields` is a list of specs such as "13" or "3^2". With one field the
    report is a dict, with several it is a list of per-field dicts.
    """
    if isinstance(fields, (str, int)):
        fields = [fields]
    text = verify_json([str(f) for f in fields], str(a), list(suites), tol)
    return json.loads(text)


def all_passed(report):
    """True iff every check in a report from verify() passed."""
    items = report if isinstance(report, list) else [report]
    return all(run["pass"] for item in items for run in item["runs"])
