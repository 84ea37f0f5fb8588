import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "frontals._jetcore",
                ["src/frontals/_jetcore.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - fallback path
    print(f"frontals: skipping compiled kernel ({exc}); "
          "the pure-Python backend will be used", file=sys.stderr)

setup(ext_modules=ext_modules)
