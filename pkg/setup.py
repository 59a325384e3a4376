"""Builds the optional compiled word kernel.

The package is fully functional without the extension: a pure-Python kernel
with the same interface is selected at import time when the compiled one is
missing. A failed compile therefore downgrades the install instead of
breaking it.
"""
import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            print(f"warning: skipping compiled kernel ({exc!r}); "
                  "pure-Python kernel will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc!r}); "
                  "pure-Python kernel will be used")


ext_modules = []
if os.environ.get("TWOGRAPH_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("twograph._kernel_cy", ["src/twograph/_kernel_cy.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
