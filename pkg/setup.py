"""Builds the optional compiled reduction kernel; the package works without it."""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("chromix._kernels._reduce", ["src/chromix/_kernels/_reduce.pyx"],
                   language="c++", extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
