import os

from setuptools import setup

ext_modules = []
if os.environ.get("HOPFEQ_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("hopfeq._fastcore", ["src/hopfeq/_fastcore.pyx"],
                       extra_compile_args=["-O2"])],
            language_level=3,
        )
    except ImportError:
        # no Cython: install with the pure-Python kernel only
        ext_modules = []

setup(ext_modules=ext_modules)
