"""Package setup for rbound."""
from setuptools import find_packages, setup

setup(
    name="rbound",
    version="0.1.0",
    description="Sharp bounds of the r-functional and GKLS relaxation-rate "
                "audits",
    packages=find_packages(include=["rbound", "rbound.*"]),
    python_requires=">=3.10",
    install_requires=["icecream>=2.1", "numpy>=1.26"],
    extras_require={"test": ["hypothesis>=6.80"]},
    entry_points={"console_scripts": ["rbound=rbound.cli.main:main"]},
)
