"""Build script: compiles the optional generation kernel.

The package is pure Python except for ziggu._fastgen, a small Cython
extension for the hot loopless-generation loop.  The extension is marked
optional: if no compiler (or Cython) is available the install still
succeeds and ziggu.loopless falls back to the pure-Python kernel.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ziggu._fastgen",
                ["src/ziggu/_fastgen.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
