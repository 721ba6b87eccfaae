import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; threshdim.kernels falls back
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("THRESHDIM_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "threshdim._kernels",
                ["src/threshdim/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
