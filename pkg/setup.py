"""Build script: compiles the modular elimination kernel when a toolchain is available.

The package works without the extension (a pure-Python fallback is selected at
import time), so any compilation failure downgrades to a plain install instead
of aborting.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "fatlocus._modcore",
                ["src/fatlocus/_modcore.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - toolchain-dependent
    print(f"fatlocus: building without compiled kernel ({exc})")

setup(ext_modules=ext_modules)
