"""Build script for the compiled kernel extension.

The extension is optional: if Cython or a C compiler is unavailable (or
``FROBASIS_SKIP_EXT=1`` is set) the package installs pure, and the kernel
dispatch in ``frobasis._kernels`` falls back to the NumPy implementations.
"""

import os

from setuptools import setup


def make_extensions():
    if os.environ.get("FROBASIS_SKIP_EXT", "") not in ("", "0"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools.extension import Extension
    except ImportError:
        return []
    ext = Extension(
        "frobasis._kernels.fastkernels",
        ["src/frobasis/_kernels/fastkernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=make_extensions())
