import os

from setuptools import Extension, setup

# The compiled kernel is an optimisation, not a requirement: the package
# falls back to the pure-Python twin in graphcomplex._kernel_py.
# Set GRAPHCOMPLEX_PURE=1 to skip building the extension entirely.
ext_modules = []
if not os.environ.get("GRAPHCOMPLEX_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "graphcomplex._kernel_c",
                    ["src/graphcomplex/_kernel_c.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
