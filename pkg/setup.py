"""Builds the compiled kernel extension.

The package works without it (a NumPy fallback is selected at import time);
build with `pip install -e . --no-build-isolation` or
`python setup.py build_ext --inplace`.
"""

import numpy
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "aop.backends._ckernels",
        ["src/aop/backends/_ckernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
