"""Build script: compiles the optional fast kernel extension.

The package is fully functional without the extension (a pure-Python
backend is selected at import time), so any failure here downgrades to
a warning instead of aborting the install. Set ORIGAMI_NO_EXT=1 to skip
the compile step entirely.
"""
import os
import sys

from setuptools import Extension, setup


def extensions():
    if os.environ.get("ORIGAMI_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("origami: Cython not available, building without compiled kernels",
              file=sys.stderr)
        return []
    # -ffp-contract=off keeps the float kernel bit-identical to the numpy
    # fallback (no fused multiply-add in either path)
    ext = Extension(
        "origami._core",
        sources=["src/origami/_core.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions())
