from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "rsst._rsst",
    sources=[
        "bindings/rsst_py.cpp",
        "src/core.cpp",
        "src/metric.cpp",
        "src/lexicon.cpp",
        "src/translator.cpp",
        "src/labelgen.cpp",
        "src/simulate.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
