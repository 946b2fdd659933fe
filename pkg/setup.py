"""Build script for the optional compiled inversion-counting kernel.

The package works without the extension (a pure-Python fallback is selected
at import time), so a missing C compiler or Cython must not break the
install.  We therefore mark the extension optional and swallow cythonize
failures.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext = Extension(
        "bisplit._inversions_c",
        sources=["src/bisplit/_inversions_c.pyx"],
    )
    ext.optional = True
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
