from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "comax",
    sources=[
        "src/numtheory.cpp",
        "src/polynomial.cpp",
        "src/ringgraph.cpp",
        "src/domination.cpp",
        "src/analysis.cpp",
        "src/report.cpp",
        "src/bindings/module.cpp",
    ],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
