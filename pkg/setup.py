"""Build script: compiles the orbit-enumeration kernel when Cython is available.

The package works without the compiled extension; powerstruct.kernels falls
back to the pure-Python twin at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("powerstruct._orbit_kernel", ["src/powerstruct/_orbit_kernel.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
