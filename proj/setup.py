import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir=""):
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        ext_fullpath = Path.cwd() / self.get_ext_fullpath(ext.name)
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if int(os.environ.get("DEBUG", 0)) else "Release"
        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={cfg}",
            f"-DPython_EXECUTABLE={sys.executable}",
            "-DJUMPFORM_BUILD_TESTS=OFF",
            "-DJUMPFORM_BUILD_PYTHON=ON",
        ]
        subprocess.run(["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "--parallel", str(os.cpu_count() or 2)],
            cwd=build_temp,
            check=True,
        )

        staged = next((build_temp / "python" / "jumpform").glob("_core*"))
        ext_fullpath.parent.mkdir(parents=True, exist_ok=True)
        self.copy_file(staged, ext_fullpath)


setup(
    packages=["jumpform"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("jumpform._core")],
    cmdclass={"build_ext": CMakeBuild},
)
