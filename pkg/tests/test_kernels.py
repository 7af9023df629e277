"""Compiled and plain-Python kernel paths must agree exactly."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

from hodgeint import _jit, kernels
from hodgeint.characters import character_table

SCRIPT = """
import json
import numpy as np
from hodgeint import _jit, kernels
from hodgeint.characters import character_table
tables = {n: character_table(n).matrix.tolist() for n in range(1, 7)}
count = kernels.count_factorizations(np.array([1, 0, 2, 3]), np.array([2, 1, 1, 0]), 5, transitive=True)
print(json.dumps({"backend": _jit.backend_name(), "tables": tables, "count": count}))
"""


def _run(disable: bool) -> dict:
    env = dict(os.environ)
    env["HODGE_DISABLE_NUMBA"] = "1" if disable else "0"
    out = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def test_backends_agree():
    compiled, plain = _run(False), _run(True)
    assert compiled["backend"] == "numba" and plain["backend"] == "python"
    assert compiled["tables"] == plain["tables"]
    assert compiled["count"] == plain["count"]


def test_mn_character_examples():
    assert kernels.mn_character(np.array([2, 1]), np.array([3])) == -1
    assert kernels.mn_character(np.array([1, 1]), np.array([2])) == -1


def test_factorization_count_small():
    # t1 t2 = id in S_2: only t1 = t2 = (01)
    assert kernels.count_factorizations(np.arange(2), np.array([1, 1]), 2) == 1
    assert kernels.count_factorizations(np.arange(3), np.array([1, 1, 1]), 0) == 1
    assert kernels.count_factorizations(np.arange(3), np.array([3, 0, 0]), 2) == 6


def test_table_dtype():
    assert character_table(5).matrix.dtype == np.int64


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("HODGE_THREADS", "1")
    assert _jit.thread_cap() == 1
    _jit.apply_thread_cap()
    monkeypatch.setenv("HODGE_THREADS", "0")
    with pytest.raises(ValueError):
        _jit.thread_cap()
