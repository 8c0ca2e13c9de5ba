"""Local invariants of plane holomorphic foliations."""

import json
import os

from ._foliage import (
    InconsistencyError,
    InputError,
    foliation_milnor_number,
    gsv_index,
    intersection,
    milnor_number,
    normalize,
    tjurina_number,
)
from . import _foliage

__all__ = [
    "InconsistencyError",
    "InputError",
    "analyze",
    "check",
    "foliation_milnor_number",
    "gsv_index",
    "intersection",
    "milnor_number",
    "normalize",
    "reduce",
    "reduce_dot",
    "tjurina_number",
]


def _case_text(case):
    # A dict, a JSON string, or a path to a case file.
    if isinstance(case, dict):
        return json.dumps(case)
    if isinstance(case, os.PathLike) or (isinstance(case, str) and not case.lstrip().startswith("{")):
        with open(case, encoding="utf-8") as f:
            return f.read()
    return case


def analyze(case, mode=None, seed=None, max_depth=None, checks=None):
    """Invariant report of a case as a dict."""
    return json.loads(_foliage.analyze_json(_case_text(case), mode, seed, max_depth, _checks(checks)))


def reduce(case, seed=None, max_depth=None):
    """Reduction tree of a case as a dict."""
    return json.loads(_foliage.reduce_json(_case_text(case), seed, max_depth))


def reduce_dot(case, seed=None, max_depth=None):
    """Reduction tree of a case as DOT text."""
    return _foliage.reduce_dot(_case_text(case), seed, max_depth)


def check(case, mode=None, seed=None, max_depth=None, checks=None):
    """Identity rows of a case as a list of dicts."""
    return json.loads(_foliage.check_json(_case_text(case), mode, seed, max_depth, _checks(checks)))


def _checks(checks):
    if checks is None or isinstance(checks, str):
        return checks
    return ",".join(checks)
