# conftest.py
# Puts the repository root on sys.path so tests import `src`, `config` and `app` like the scripts do.
import os
import sys

ROOT = os.path.dirname(os.path.abspath(__file__))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive runs at the largest desk-scale sizes")
