"""Build script for the optional compiled kernels.

The package works without the extension (a pure NumPy/Python fallback is
selected at import time); building it just makes statevector updates and
the depth sweep considerably faster.
"""
import numpy as np
from setuptools import Extension, setup
from Cython.Build import cythonize

ext = Extension(
    "rangeoracles._kernels",
    ["src/rangeoracles/_kernels.pyx"],
    include_dirs=[np.get_include()],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
)

setup(ext_modules=cythonize([ext], language_level=3))
