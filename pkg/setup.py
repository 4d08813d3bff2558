"""Build script for the optional compiled kernels.

The package is fully functional without the extension: linelat._kernels
falls back to a NumPy/SciPy implementation when the compiled module is
missing (or when LINELAT_PURE_PYTHON is set).
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/linelat/_kernels/_core.pyx"],
        language_level=3,
    )
except ImportError:
    print("Cython not available; building linelat without compiled kernels")

setup(ext_modules=ext_modules)
