from glob import glob

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("ZXC_BUILD_JOBS", default=8).install()

setup(
    ext_modules=[
        Pybind11Extension(
            "zxcontract._core",
            sorted(glob("src/*.cpp")),
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
