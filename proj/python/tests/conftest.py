import os
import pathlib
import sys

_expected = os.environ.get("APPROXJAC_EXPECT_MODULE_DIR")
if _expected:
    # Under ctest the staged build-tree module must win over an editable install hook.
    sys.meta_path[:] = [f for f in sys.meta_path if "editable" not in type(f).__module__]

import approxjac  # noqa: E402


def pytest_report_header(config):
    return f"approxjac loaded from {pathlib.Path(approxjac._core.__file__).parent}"


def pytest_sessionstart(session):
    if _expected:
        loaded = pathlib.Path(approxjac._core.__file__).resolve().parent
        if loaded != pathlib.Path(_expected).resolve():
            raise RuntimeError(f"testing {loaded}, expected the build tree at {_expected}")
