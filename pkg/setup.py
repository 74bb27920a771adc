"""Build hook for the optional compiled kernels.

The package installs fine without Cython or a C compiler; the pure-Python
kernels are selected at import time when the extension is absent.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "cssep._kernels._native",
                ["src/cssep/_kernels/_native.pyx"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
