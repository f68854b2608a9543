import subprocess
from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup


def eigen_include_dirs():
    try:
        out = subprocess.run(
            ["pkg-config", "--cflags-only-I", "eigen3"],
            capture_output=True,
            text=True,
            check=True,
        )
        dirs = [flag[2:] for flag in out.stdout.split() if flag.startswith("-I")]
        if dirs:
            return dirs
    except (OSError, subprocess.CalledProcessError):
        pass
    return ["/usr/include/eigen3"]


ext_modules = [
    Pybind11Extension(
        "hypersimplex._core",
        sources=sorted(glob("src/*.cpp")) + ["src/python/module.cpp"],
        include_dirs=["include", *eigen_include_dirs()],
        cxx_std=20,
    )
]

setup(ext_modules=ext_modules, cmdclass={"build_ext": build_ext})
