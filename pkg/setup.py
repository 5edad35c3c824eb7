"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so any compilation problem downgrades to a warning
instead of failing the install.  Set DRIVENQUBIT_NO_EXT=1 to skip the build.
"""

import os
import sys

from setuptools import setup

ext_modules = []
if not os.environ.get("DRIVENQUBIT_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "drivenqubit._amp_cython",
                    ["src/drivenqubit/_amp_cython.pyx"],
                    include_dirs=[numpy.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # pragma: no cover - build-env dependent
        sys.stderr.write(
            f"drivenqubit: skipping Cython extension ({exc!r}); "
            "the pure-Python kernels will be used.\n"
        )
        ext_modules = []

setup(ext_modules=ext_modules)
