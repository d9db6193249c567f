#  cmaudit/scripts/__init__.py
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
Provides functions which support common tasks used by all command-line scripts
in the cmaudit package.
"""
import sys, logging
from os import linesep
from pathlib import Path
from cmaudit import LOG_FORMAT, ColormapFileError
from cmaudit.io import REGISTRY, SUFFIXES, FORMATS, atomic_write, load_colormap

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

STDOUT = '-'


def add_verbose_argument(parser):
	parser.add_argument('--verbose', '-v', action = 'store_true',
		help = 'Show more detailed debug information.')

def add_input_format_argument(parser):
	parser.add_argument('--input-format', type = str, default = 'auto',
		choices = ('auto',) + FORMATS,
		help = 'Format of colormap files given as targets (default: by file suffix).')

def setup_logging(options):
	logging.basicConfig(
		level = logging.DEBUG if options.verbose else logging.ERROR,
		format = LOG_FORMAT
	)

def resolve_target(target, format = 'auto'):	# pylint: disable = redefined-builtin
	"""
	Returns the Colormap named by "target": an existing file is loaded, anything
	else is looked up in the registry.

	Raises ColormapFileError, ColormapNotFoundError, OSError
	"""
	path = Path(target)
	if path.is_file():
		return load_colormap(path, format)
	if path.suffix.lower() in SUFFIXES or len(path.parts) > 1:
		raise ColormapFileError(target, None, 'File not found')
	return REGISTRY.get(target)

def report_error(err, stream = None):
	"""
	Writes the error to stderr and returns the "input error" exit status.
	"""
	(stream or sys.stderr).write(f'Error: {err}{linesep}')
	return EXIT_ERROR

def write_text(destination, text):
	"""
	Writes "text" to the file "destination" (atomically), or to stdout when
	"destination" is "-".
	"""
	if destination == STDOUT:
		sys.stdout.write(text)
	else:
		with atomic_write(destination) as fob:
			fob.write(text)


#  end cmaudit/scripts/__init__.py
