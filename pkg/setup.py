#!/usr/bin/env python

from setuptools import setup
from glob import glob

NAME = "opine"

with open('README.md') as fo:
    LONG_DESCRIPTION = fo.read()


setup(
    name=NAME,
    packages=["opine"],
    install_requires=["docopt>=0.6.2"],
    scripts=glob("bin/*"),
    setup_requires=["setuptools_scm"],
    use_scm_version=True,
    python_requires=">=3.8",
    test_suite="tests",
    tests_require=["pytest"],
    package_data={"opine": ["data/*"]},

    description="Mine opinionated keyphrases from social media comment corpora.",
    long_description_content_type="text/markdown",
    long_description=LONG_DESCRIPTION,
    license="Apache 2.0",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: POSIX",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Text Processing :: Linguistic",
    ],
)

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
