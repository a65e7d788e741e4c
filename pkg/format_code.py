#!/usr/bin/env python3
"""Format the unirat sources with black (pass --check to only report)"""
import subprocess
import sys
from pathlib import Path

BASE_DIRS = ["unirat", "scripts", "tests"]
LINE_LENGTH = "100"


def format_python_files(check=False):
    """Run black over every Python file under BASE_DIRS"""
    py_files = []
    for base in BASE_DIRS:
        path = Path(base)
        if path.is_dir():
            py_files.extend(str(p) for p in sorted(path.rglob("*.py")))
    py_files.append("format_code.py")

    command = [sys.executable, "-m", "black", "--line-length", LINE_LENGTH]
    if check:
        command.append("--check")
    print(f"{'Checking' if check else 'Formatting'} {len(py_files)} files...")
    result = subprocess.run(command + py_files, capture_output=True, text=True)
    if result.returncode != 0:
        print(result.stderr)
    return result.returncode == 0


if __name__ == "__main__":
    success = format_python_files(check="--check" in sys.argv[1:])
    sys.exit(0 if success else 1)
