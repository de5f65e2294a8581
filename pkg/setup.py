from setuptools import setup, find_packages

setup(
    name="shrinkm",
    version="0.1.0",
    packages=find_packages(exclude=("tests", "examples*")),
    python_requires=">=3.9",
    install_requires=[
        "numpy>=1.19.5",
        "scipy>=1.7.0",
        "typing_extensions>=4.4.0",
    ],
    extras_require={
        "test": ["scikit-learn>=1.0"],
    },
    entry_points={
        "console_scripts": ["shrinkm=shrinkm.cli:main"],
    },
)
