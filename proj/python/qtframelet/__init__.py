"""Quasi-tight framelet filter banks: construction, exact verification, smoothness, transforms.

Filters and banks are JSON documents. Every function accepts a dict, a JSON string,
a file path, or "fixture:<name>", and returns decoded JSON.
"""

import json

from . import _core
from ._core import QtfError, bank_fixture_names, fixture_names

__all__ = [
    "QtfError",
    "analyze",
    "bank_fixture_names",
    "construct",
    "fixture",
    "fixture_names",
    "inverse_transform",
    "sample",
    "smoothness",
    "specfact",
    "spot_check",
    "transform",
    "verify",
]


def _doc(x):
    return x if isinstance(x, str) else json.dumps(x)


def fixture(name):
    return json.loads(_core.fixture(name))


def analyze(filt):
    return json.loads(_core.analyze(_doc(filt)))


def construct(method, filt, m=0, merge=False, max_expand=4):
    """method: directional, vm-sos, vm-linear or differencing."""
    return json.loads(_core.construct(method, _doc(filt), m, merge, max_expand))


def verify(bank):
    return json.loads(_core.verify(_doc(bank)))


def spot_check(bank, samples=64):
    return _core.spot_check(_doc(bank), samples)


def smoothness(filt, method="transition", cross_check=False, tol=1e-6):
    return json.loads(_core.smoothness(_doc(filt), method, cross_check, tol))


def specfact(matrix):
    return json.loads(_core.specfact(_doc(matrix)))


def transform(signal, bank, levels):
    return json.loads(_core.transform(_doc(signal), _doc(bank), levels))


def inverse_transform(tree, bank):
    return json.loads(_core.inverse_transform(_doc(tree), _doc(bank)))


def sample(filt, depth, which=0):
    """Rows (x_1, ..., x_d, value); which = 0 samples phi, which = l the l-th framelet."""
    return _core.sample(_doc(filt), depth, which)
