"""Exact engine for TH-pentagon tilings built from windmill and ship units."""

try:
    from ._pentatile import *  # noqa: F401,F403
except ImportError:  # running against a plain CMake build
    import os
    import sys

    _ext_dir = os.environ.get("PENTATILE_EXT_DIR")
    if not _ext_dir:
        raise
    sys.path.insert(0, _ext_dir)
    from _pentatile import *  # noqa: F401,F403
