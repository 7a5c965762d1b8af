from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ramseykit._kernels._ext",
                ["src/ramseykit/_kernels/_ext.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python fallback is selected at import time; the package still works.
    ext_modules = []

setup(ext_modules=ext_modules)
