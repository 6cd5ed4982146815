from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "torex._core",
    sources=[
        "python/bindings.cpp",
        "src/rational.cpp",
        "src/catalog.cpp",
        "src/io.cpp",
        "src/driver.cpp",
    ],
    include_dirs=["include", "vendor", "/usr/include/eigen3"],
    libraries=["gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
