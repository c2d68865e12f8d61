from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core = Pybind11Extension(
    "unfold._core",
    sources=[
        "src/py_bindings.cpp",
        "src/rational.cpp",
        "src/pattern.cpp",
        "src/sharkovsky.cpp",
        "src/plmap.cpp",
        "src/heave.cpp",
        "src/rotation.cpp",
        "src/forcing.cpp",
        "src/unfolding.cpp",
        "src/report.cpp",
        "src/svg.cpp",
        "src/verify.cpp",
    ],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[core], cmdclass={"build_ext": build_ext})
