from setuptools import Extension, setup

# The compiled summation kernel is optional: without Cython (or a working C
# compiler) the package falls back to the pure-Python twin at import time.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "izeta._kernel",
                ["src/izeta/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
