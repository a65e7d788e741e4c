"""Setup configuration for the unirat package."""

from setuptools import setup, find_packages

setup(
    name="unirat",
    version="1.0.0",
    description="Point counts, eta-quotient congruences and blow-up bookkeeping for unirationality tests",
    author="Arithmetic Geometry Team",
    packages=find_packages(include=["unirat", "unirat.*"]),
    package_data={"unirat.reporting": ["templates/*.j2"]},
    python_requires=">=3.8",
    install_requires=[
        "click>=8.0.0",
        "jinja2>=3.0.0",
        "numpy>=1.22.0",
        "pandas>=1.5.0",
        "python-dotenv>=0.19.0",
        "sympy>=1.10",
        "tabulate>=0.9.0",
        "tenacity>=8.0.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "black>=22.0.0",
            "flake8>=4.0.0",
        ]
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={
        "console_scripts": [
            "unirat=unirat.cli.cli:cli",
        ],
    },
)
