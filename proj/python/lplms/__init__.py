"""Sparse system identification with LMS and p-norm penalized LMS variants.

Thin python layer over the C++ core. The heavy lifting (filter updates,
signal generation, Monte-Carlo averaging) happens in the `_lplms` extension.
"""

try:
    from ._lplms import *  # noqa: F401,F403  (installed package layout)
    from . import _lplms as _impl
except ImportError:  # pragma: no cover - build-tree layout used by the tests
    from _lplms import *  # noqa: F401,F403
    import _lplms as _impl

__version__ = "0.1.0"


def bundled_ecg_ir_path():
    """Path of the ECG-like impulse response shipped with the package.

    Falls back to the path compiled into the core when the package copy is
    absent (e.g. when running from the build tree).
    """
    import pathlib

    packaged = pathlib.Path(__file__).resolve().parent / "data" / "ecg_ir.txt"
    if packaged.is_file():
        return str(packaged)
    return _impl.default_ecg_ir_path()


def preset(name):
    """build_preset with the packaged data file wired in for example3."""
    if name == "example3":
        return _impl.build_preset(name, bundled_ecg_ir_path())
    return _impl.build_preset(name)
