# Legacy-compatibility file - do NOT change
from setuptools import setup

setup()
