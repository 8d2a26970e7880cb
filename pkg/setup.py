"""Build shim for the optional C kernel.

The package is pure Python plus one small C extension holding the two hot
loops (series update, divisor-sum fill).  If the extension fails to build,
installation proceeds and the numpy fallback is used at runtime.

Environment knobs at build time:
    PARITYSET_PORTABLE=1   do not pass -march=native
    PARITYSET_NO_CEXT=1    skip the extension entirely
"""

import os
import platform

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: C kernel not built ({exc}); numpy fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: C kernel not built ({exc}); numpy fallback will be used")


ext_modules = []
if os.environ.get("PARITYSET_NO_CEXT") != "1":
    from setuptools import Extension

    flags = ["-O3", "-std=c99"]
    if (
        os.environ.get("PARITYSET_PORTABLE") != "1"
        and platform.machine() in ("x86_64", "AMD64")
    ):
        flags += ["-march=native", "-funroll-loops"]
    ext_modules.append(
        Extension(
            "parityset._seriescore",
            sources=["src/parityset/_seriescore.c"],
            extra_compile_args=flags,
            optional=True,
        )
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
