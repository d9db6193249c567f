#  cmaudit/__main__.py
#
#  Copyright 2026 Leon Dionne <ldionne@dridesign.sh.cn>
#
#  This program is free software; you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation; either version 2 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program; if not, write to the Free Software
#  Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston,
#  MA 02110-1301, USA.
#
"""
Runs a subcommand ("cmaudit audit jet"), or shows what scripts are available.
"""
import sys
from os import linesep
from os.path import join, dirname, basename, splitext
from importlib import import_module
from glob import glob
from textwrap import wrap
import cmaudit
from cmaudit import scripts

SUBCOMMAND_PREFIX = 'cm_'


def _subcommands():
	"""
	Returns dict of subcommand name: module name, i.e. "audit": "cm_audit".
	"""
	names = {}
	for filename in sorted(glob(join(dirname(scripts.__file__), f'{SUBCOMMAND_PREFIX}*.py'))):
		module_name = splitext(basename(filename))[0]
		names[module_name[len(SUBCOMMAND_PREFIX):]] = module_name
	return names

def _print_doc(module):
	print(module.__name__.split('.').pop().replace('_', '-'))
	print(linesep.join(wrap(module.__doc__.strip(),
		initial_indent = '  ', subsequent_indent = '  ')))
	print()

def main(argv = None):
	argv = sys.argv[1:] if argv is None else argv
	subcommands = _subcommands()
	if argv and argv[0] in subcommands:
		module = import_module(f'.scripts.{subcommands[argv[0]]}', 'cmaudit')
		return module.main(argv[1:])
	_print_doc(cmaudit)
	print('---------------------------------')
	print('Scripts included in this package:')
	print('---------------------------------')
	print()
	for module_name in subcommands.values():
		_print_doc(import_module(f'.scripts.{module_name}', 'cmaudit'))
	print(f'Run any of them as "cmaudit <{"|".join(subcommands)}> ..."')
	return 2 if argv else 0


if __name__ == "__main__":
	sys.exit(main())


#  end cmaudit/__main__.py
