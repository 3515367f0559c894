"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (pure-Python kernels are selected
at import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("quasisym._core_cy", ["src/quasisym/_core_cy.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
