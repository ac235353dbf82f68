"""Build script for the optional compiled kernel extension.

The package is fully functional as pure Python.  When Cython and a C
toolchain are present, the hot kernels (blade sign table, dense geometric
product, integer matrix rank) are compiled as cliffidem._kernels._fast;
the kernel package falls back to the pure implementation at import time
if the extension is absent, so a failed build must never break install.
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
                "cliffidem._kernels._fast",
                ["src/cliffidem/_kernels/_fast.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
