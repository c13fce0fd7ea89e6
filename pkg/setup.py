"""Build hook: compiles the optional C kernels when Cython and a toolchain exist.

The package is fully functional without the extension; _kernels falls back to
the pure-Python implementations at import time.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/sturmian/_kernels/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
