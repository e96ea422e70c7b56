"""Build script.

The compiled kernel is optional: if Cython (or a C compiler) is missing the
package installs anyway and falls back to the pure-Python kernels at import.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "traceforms.groups._kernels",
                ["src/traceforms/groups/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
