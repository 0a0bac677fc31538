"""Build script for the optional compiled counting kernel.

The package is pure Python except for one hot loop: the box scan that counts
lattice points. When Cython and a C compiler are present, that loop is built
as ``hirzquant._fastcount``; otherwise installation proceeds and the package
falls back to the pure-Python kernel at import time.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("hirzquant._fastcount", ["src/hirzquant/_fastcount.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    warnings.warn("Cython not available: building without the compiled counting kernel")


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a degraded install, not a fatal one."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, broken toolchain, ...
            warnings.warn(f"skipping compiled counting kernel: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping {ext.name}: {exc}")


setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
