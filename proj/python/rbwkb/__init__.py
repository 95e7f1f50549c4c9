"""Rb(87) Rydberg spectra from a modified model potential with WKB quantization.

Thin wrapper around the compiled extension. When the package is built with
scikit-build-core the extension lives inside this package; in a plain CMake
build tree it sits next to the package on sys.path.
"""

import os

try:
    from ._rbwkb import *  # noqa: F401,F403
    from . import _rbwkb as _ext
except ImportError:
    from _rbwkb import *  # noqa: F401,F403
    import _rbwkb as _ext

__all__ = [name for name in dir(_ext) if not name.startswith("_")]


def data_dir() -> str:
    """Directory holding rb87.params and reference_tables.csv.

    Honors RBWKB_DATA_DIR, then a data/ directory installed with the package,
    then the compiled-in default.
    """
    env = os.environ.get("RBWKB_DATA_DIR")
    if env:
        return env
    here = os.path.join(os.path.dirname(__file__), "data")
    if os.path.isdir(here):
        return here
    return _ext.default_data_dir()


def load_default_params():
    """ModelParams from the bundled rb87.params."""
    return _ext.load_params(os.path.join(data_dir(), "rb87.params"))
