import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HOPRIMES_PURE", "") in ("", "0"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hoprimes._kernels._ckernels",
                ["src/hoprimes/_kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
