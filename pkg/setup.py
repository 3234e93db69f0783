import os

from setuptools import setup, Extension

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None and os.path.exists("src/indmatch/_fastcore.pyx"):
    ext_modules = cythonize(
        [Extension("indmatch._fastcore", ["src/indmatch/_fastcore.pyx"])],
        language_level=3,
    )
else:
    # The package works without the compiled core; the pure-Python
    # implementation is selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
