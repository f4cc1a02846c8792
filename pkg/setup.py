"""Build script: compiles the optional accelerator extension.

The package is fully functional without the extension (a pure-Python twin
of every kernel ships in bordersub._kernels_py); the extension only makes
the hot loops faster.  Set BORDERSUB_PURE=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("BORDERSUB_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext = Extension(
            "bordersub._kernels",
            ["src/bordersub/_kernels.pyx"],
            optional=True,
        )
        ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
