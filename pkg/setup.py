# Builds the optional Smith normal form kernel.  The package works without
# it (pure-Python fallback), but the chessboard homology sweeps are much
# faster with the compiled kernel.
from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "bbg._snf_core",
        ["src/bbg/_snf_core.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )
)
