import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("AFFINECRYSTAL_PURE"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext = Extension(
            "affinecrystal._kernel",
            ["src/affinecrystal/_kernel.pyx"],
            optional=True,
        )
        ext_modules = cythonize(
            [ext],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
            },
        )

setup(ext_modules=ext_modules)
