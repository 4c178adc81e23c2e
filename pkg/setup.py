"""Build script: compiles the optional fast core when Cython + a C compiler exist.

The package is fully functional without the extension (a NumPy fallback is
selected at import time), so any build failure here degrades to a pure build
instead of aborting the install.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "salemkit.core._fast",
                ["src/salemkit/core/_fast.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - depends on build host
    print(f"salemkit: skipping compiled core ({exc!r}); pure-Python core will be used")

setup(ext_modules=ext_modules)
