"""Build script: compiles the optional Cython contraction kernel.

The package is fully functional without the extension (a pure-numpy
fallback is selected at import time), so any failure to cythonize or
compile downgrades to a pure build instead of aborting the install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "abctensor._kernels",
                ["src/abctensor/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
