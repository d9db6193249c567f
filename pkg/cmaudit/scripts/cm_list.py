#  cmaudit/scripts/cm_list.py
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
Lists the available colormaps: name, source, sample count and kind. Colormap
files given on the command line are listed along with the embedded ones.
"""
import sys, argparse
from cmaudit import CmauditError
from cmaudit.io import Registry
from . import (
	EXIT_OK, add_verbose_argument, add_input_format_argument, setup_logging, report_error
)


def main(argv = None):
	"""
	Entry point for importing script from elsewhere.
	"""
	parser = argparse.ArgumentParser(prog = 'cm-list')
	parser.add_argument('Filename', type = str, nargs = '*',
		help = 'Colormap files to list with the embedded colormaps.')
	add_input_format_argument(parser)
	add_verbose_argument(parser)
	parser.epilog = __doc__
	options = parser.parse_args(argv)
	setup_logging(options)

	registry = Registry.with_embedded()
	try:
		for filename in options.Filename:
			registry.register_file(filename, format = options.input_format)
	except (CmauditError, OSError) as err:
		return report_error(err)
	for entry in registry:
		try:
			cmap = entry.colormap
		except CmauditError as err:
			print(f'{entry.name}\t{entry.source}\t-\t-\t# {err}')
		else:
			print(f'{entry.name}\t{entry.source}\t{len(cmap)}\t{cmap.kind}')
	return EXIT_OK


if __name__ == '__main__':
	sys.exit(main() or 0)


#  end cmaudit/scripts/cm_list.py
