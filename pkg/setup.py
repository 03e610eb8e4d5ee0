"""Build script for the optional compiled kernel.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so any
failure to build it only costs speed.  Set AFFKAC_SKIP_EXT=1 to skip the
extension build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that degrades to a warning when compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or toolchain missing
            print(f"warning: compiled kernel not built ({exc}); "
                  "falling back to the pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to the pure-Python kernel")


ext_modules = []
if os.environ.get("AFFKAC_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("affkac._ckernel", ["src/affkac/_ckernel.pyx"])],
            language_level="3",
        )
    except ImportError:
        print("warning: Cython not available; building without the compiled kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
