#!/usr/bin/python
#
# Copyright 2026 The gqbraid Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from setuptools import setup

import lib

setup(name='gqbraid',
      version=lib.__version__,
      license='Apache License, Version 2.0',
      description='Yang-Baxter maps on quivers and their Garside structure',
      classifiers=[
          'Development Status :: 4 - Beta',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: Apache Software License',
          'Operating System :: OS Independent',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering :: Mathematics'],
      install_requires=['PyYAML', 'ply'],
      py_modules=['gqbraid'],
      packages=['lib'],
      data_files=[('', ['gqbraid.yaml'])],
      entry_points={'console_scripts': ['gqbraid = gqbraid:main']})
