"""Build script for the optional compiled run-length kernel.

The package works without the extension: ihmcube._kernel falls back to the
vectorized numpy implementation when the compiled module is absent.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "ihmcube._runlength_cy",
                ["src/ihmcube/_runlength_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
