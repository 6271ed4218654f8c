import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "vtvlab._geomcore",
                ["src/vtvlab/_geomcore.pyx"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython available: install pure-python only, the geometry module
    # falls back to the numpy kernels at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
