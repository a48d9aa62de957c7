import os

import numpy as np
from setuptools import Extension, setup

PYX = "src/segcover/_kernels.pyx"

if os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("segcover._kernels", [PYX],
                       include_dirs=[np.get_include()])],
            language_level=3,
        )
    except ImportError:
        # No Cython: the package still installs and runs on the pure-Python
        # kernel fallback (see segcover._backend).
        ext_modules = []
else:
    ext_modules = []

setup(ext_modules=ext_modules)
