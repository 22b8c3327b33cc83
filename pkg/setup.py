"""Build script: compiles the optional Cython kernel extension.

Set METRICDIM_NO_EXT=1 to skip the extension entirely; the package then
runs on the pure-Python kernel fallback.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("METRICDIM_NO_EXT"):
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "metricdim._kernels._fast",
                ["src/metricdim/_kernels/_fast.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
