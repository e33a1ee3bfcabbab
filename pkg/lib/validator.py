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

"""Tools to verify the structure of nested configuration and document data."""


class Error(Exception):
  """Base error class."""


class StructureError(Error):
  """Exception to use when data does not match the expected structure."""

  def __init__(self, message, path=''):
    Error.__init__(self, message)
    self.path = path


def _Join(path, item):
  if isinstance(item, int):
    return '%s[%d]' % (path, item)
  if not path:
    return str(item)
  return '%s.%s' % (path, item)


def _TypeName(typ):
  return {str: 'string', int: 'integer', list: 'list', dict: 'object',
          bool: 'boolean'}.get(typ, typ.__name__)


class StructureValidator(object):
  """Class to verify the sanity of nested lists and dictionaries.

  A structure is described by example: a dictionary lists the required keys
  and the structure of their values, a list holds exactly one element which
  describes every element of the checked list, and any other value stands for
  its own type (e.g. '' for strings, 0 for integers).
  """

  def CheckItem(self, dictionary, item, typ=None, path=''):
    """Checks for the presence of an item in a dictionary.

    Args:
      dictionary: Data part that should be checked.
      item: Name of the key to check as string.
      typ: Type of the value to check. Default is to not check the type.
      path: Field path of the dictionary, used in error messages.

    Raises:
      StructureError: The data is not sane.
    """
    field = _Join(path, item)
    if not isinstance(dictionary, dict) or item not in dictionary:
      raise StructureError('"%s" is not defined' % field, field)
    if typ and type(dictionary[item]) is not typ:
      raise StructureError('type of "%s" is %s, expected %s' % (
          field, _TypeName(type(dictionary[item])), _TypeName(typ)), field)

  def CheckStructure(self, data, structure, path='', max_recursion_depth=30):
    """Recursively checks the sanity and structure of the data.

    Args:
      data: Dictionary, list or scalar to check.
      structure: Structure against which the data should be checked.
      path: Field path of the data, used in error messages.
      max_recursion_depth: Defines the maximum amount of recursion cycles before
        checking is aborted. Default is 30.

    Raises:
      StructureError: The data is not sane.
    """
    max_depth = max_recursion_depth - 1
    if max_depth <= 0:
      raise StructureError('maximum recursion depth reached at "%s"' % path,
                           path)
    if type(structure) is dict:
      if type(data) is not dict:
        raise StructureError('type of "%s" is %s, expected object' % (
            path or '<root>', _TypeName(type(data))), path)
      for item in sorted(structure):
        value = structure[item]
        self.CheckItem(data, item, typ=type(value), path=path)
        self.CheckStructure(data[item], value, _Join(path, item), max_depth)
    elif type(structure) is list:
      if type(data) is not list:
        raise StructureError('type of "%s" is %s, expected list' % (
            path or '<root>', _TypeName(type(data))), path)
      if structure:
        for (i, list_value) in enumerate(data):
          self.CheckStructure(list_value, structure[0], _Join(path, i),
                              max_depth)
    elif type(structure) is not type(data):
      raise StructureError('type of "%s" is %s, expected %s' % (
          path or '<root>', _TypeName(type(data)),
          _TypeName(type(structure))), path)
