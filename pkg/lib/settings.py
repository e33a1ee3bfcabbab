#!/usr/bin/python
#
# Copyright 2026 The gqbraid Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""Tunable limits read from gqbraid.yaml, the environment and flags.

Later sources win: built-in defaults, the YAML file, GQ_MAX_VIOLATIONS and
finally an explicit --max-violations value.
"""

import copy
import logging
import os

import yaml

from lib import validator

DEFAULT_CONFIG = 'gqbraid.yaml'
MAX_VIOLATIONS_ENV = 'GQ_MAX_VIOLATIONS'

DEFAULTS = {
    'reports': {
        'max_violations': 100,
    },
    'structure_category': {
        'bfs_cap': 10000,
        'oracle_max_len': 4,
        'grid_max_len': 3,
    },
    'heaps': {
        'group_order_bound': 64,
        'sweep_samples': 10000,
        'sweep_seed': 0,
    },
}


class Error(Exception):
  """Base error class."""


class ConfigError(Error):
  """The configuration cannot be read or is not sane."""


class Settings(object):
  """Flat view of the merged configuration."""

  def __init__(self, config):
    self.config = config
    self.max_violations = config['reports']['max_violations']
    self.bfs_cap = config['structure_category']['bfs_cap']
    self.oracle_max_len = config['structure_category']['oracle_max_len']
    self.grid_max_len = config['structure_category']['grid_max_len']
    self.group_order_bound = config['heaps']['group_order_bound']
    self.sweep_samples = config['heaps']['sweep_samples']
    self.sweep_seed = config['heaps']['sweep_seed']

  def __repr__(self):
    return 'Settings(%r)' % self.config


def _ReadConfiguration(path):
  try:
    with open(path) as config_file:
      config = yaml.safe_load(config_file)
  except IOError as e:
    raise ConfigError('Unable to open config: %s' % e)
  except yaml.YAMLError as e:
    raise ConfigError('Unable to parse config %s: %s' % (path, e))
  return config or {}


def _Merge(config):
  if not isinstance(config, dict):
    raise ConfigError('the configuration must be a mapping')
  merged = copy.deepcopy(DEFAULTS)
  for section, values in config.items():
    if section not in DEFAULTS:
      raise ConfigError('unknown configuration section "%s"' % section)
    if not isinstance(values, dict):
      raise ConfigError('"%s" must be a mapping' % section)
    for key, value in values.items():
      if key not in DEFAULTS[section]:
        raise ConfigError('unknown configuration key "%s.%s"' % (section, key))
      merged[section][key] = value
  try:
    validator.StructureValidator().CheckStructure(merged, DEFAULTS)
  except validator.StructureError as e:
    raise ConfigError('bad configuration: %s' % e)
  for section, values in sorted(merged.items()):
    for key, value in sorted(values.items()):
      if value < 0:
        raise ConfigError('"%s.%s" must not be negative' % (section, key))
  return merged


def ReadSettings(path=None, environ=None, max_violations=None):
  """Builds the settings from all sources.

  Args:
    path: configuration file; when None, DEFAULT_CONFIG is used if it exists.
    environ: mapping used in place of os.environ.
    max_violations: explicit override, e.g. from the command line.

  Returns:
    Settings.

  Raises:
    ConfigError: an explicit file is missing, or a source is not sane.
  """
  if environ is None:
    environ = os.environ
  config = {}
  if path is not None:
    config = _ReadConfiguration(path)
  elif os.path.exists(DEFAULT_CONFIG):
    config = _ReadConfiguration(DEFAULT_CONFIG)
  merged = _Merge(config)
  if MAX_VIOLATIONS_ENV in environ:
    try:
      merged['reports']['max_violations'] = int(environ[MAX_VIOLATIONS_ENV])
    except ValueError:
      raise ConfigError('%s must be an integer, got %r' % (
          MAX_VIOLATIONS_ENV, environ[MAX_VIOLATIONS_ENV]))
  if max_violations is not None:
    merged['reports']['max_violations'] = max_violations
  if merged['reports']['max_violations'] < 0:
    raise ConfigError('max_violations must not be negative')
  logging.debug('settings: %s', merged)
  return Settings(merged)
