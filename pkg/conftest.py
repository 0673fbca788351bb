"""
conftest.py  (project root)
============================
Puts src/ and tests/ on sys.path so the package and the shared golden
instances import without installation, and pins the budget override off so
a developer's DNACC_BUDGET cannot change test outcomes.
"""
import os
import sys

_root = os.path.dirname(__file__)

# ── Ensure src/ and tests/ are importable ────────────────────────────────────
sys.path.insert(0, os.path.join(_root, 'src'))
sys.path.insert(0, os.path.join(_root, 'tests'))

os.environ.pop('DNACC_BUDGET', None)
