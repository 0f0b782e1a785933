import os

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # no Cython: install the pure-Python backend only
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("NPNSIG_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "npnsig._kernels",
                ["src/npnsig/_kernels.pyx"],
                include_dirs=[np.get_include()],
                language="c++",
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
