"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (``dictlp._kernels``
falls back to the pure-Python implementation at import time), so a missing
Cython or C compiler only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("dictlp._ckernels", ["src/dictlp/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
