"""Builds the optional compiled kernel module.

The package works without it: ``polyval.kernels`` falls back to the pure
Python implementation when the extension is absent.  Set POLYVAL_SKIP_EXT=1
to install without a compiler.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("POLYVAL_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("polyval._speedups", ["src/polyval/_speedups.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
