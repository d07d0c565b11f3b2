"""Lets the smoke tests run against either an installed wheel or the
extension module from a plain CMake build directory."""

import importlib.util
import os
import sys

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))


def _find_core_so():
    candidates = [os.environ.get("OESNUM_CORE_DIR"), os.path.join(ROOT, "build")]
    for directory in candidates:
        if not directory or not os.path.isdir(directory):
            continue
        for name in os.listdir(directory):
            if name.startswith("_core") and name.endswith(".so"):
                return os.path.join(directory, name)
    return None


try:
    import oesnum  # noqa: F401
except ImportError:
    so_path = _find_core_so()
    if so_path:
        spec = importlib.util.spec_from_file_location("oesnum._core", so_path)
        core = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(core)
        sys.modules["oesnum._core"] = core
        sys.path.insert(0, os.path.join(ROOT, "python"))
