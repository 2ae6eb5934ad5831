"""Build script: compiles the optional enumeration kernel.

The package works without the extension (a pure-Python twin of the kernel is
selected at import time), so any failure here downgrades to a pure build
instead of aborting the install.
"""

from setuptools import Extension, setup


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "maymust._kernel._speedups",
        ["src/maymust/_kernel/_speedups.pyx"],
        extra_compile_args=["-O2"],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=_extensions())
