"""Build script for the optional C subset-enumeration kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so a missing compiler or missing Cython only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("blockcheb._subsetcount", ["src/blockcheb/_subsetcount.pyx"])],
        language_level="3",
    )

setup(ext_modules=ext_modules)
