#  cmaudit/scripts/cm_compare.py
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
Compares two or more colormaps by perceptual range, uniformity, lightness
monotonicity and CVD consistency. Prints a tab-separated table, largest
perceptual range first.
"""
import sys, json, argparse
from progress.bar import PixelBar
from cmaudit import CmauditError
from cmaudit.metrics import ANOMALY_SEVERITY, compare
from . import (
	EXIT_OK, STDOUT,
	add_verbose_argument, add_input_format_argument, setup_logging,
	resolve_target, report_error, write_text
)

PROGRESS_BAR_MESSAGE = 'Measuring colormaps'

COLUMNS = ('name', 'range', 'uniformityRms', 'monotonicity', 'cvdConsistency')


def _cell(value):
	if value is None:
		return '-'
	if isinstance(value, float):
		return f'{value:.6f}'
	return str(value)

def print_table(rows, stream = None):
	stream = stream or sys.stdout
	stream.write('\t'.join(COLUMNS) + '\n')
	for row in rows:
		stream.write('\t'.join(_cell(value) for value in row) + '\n')


def main(argv = None):
	"""
	Entry point for importing script from elsewhere.
	"""
	parser = argparse.ArgumentParser(prog = 'cm-compare')
	parser.add_argument('Target', type = str, nargs = '+',
		help = 'Colormap names or colormap files (at least two).')
	parser.add_argument('--json', type = str, metavar = 'PATH',
		help = 'Also write the table as JSON ("-" for standard output, replacing the table).')
	parser.add_argument('--anomaly-severity', type = float, default = ANOMALY_SEVERITY,
		metavar = 'N', help = f'CVD severity (percent) of the "anomaly" variants (default {ANOMALY_SEVERITY:g}).')
	add_input_format_argument(parser)
	add_verbose_argument(parser)
	parser.epilog = __doc__
	options = parser.parse_args(argv)
	setup_logging(options)

	try:
		cmaps = [ resolve_target(target, options.input_format) for target in options.Target ]
		with PixelBar(PROGRESS_BAR_MESSAGE, max = len(cmaps)) as progress_bar:
			rows = compare(cmaps, anomaly_severity = options.anomaly_severity,
				progress = progress_bar.next)
	except (CmauditError, OSError) as err:
		return report_error(err)
	except KeyboardInterrupt:
		print()
		return 3
	if options.json:
		try:
			write_text(options.json,
				json.dumps([ row.to_dict() for row in rows ], indent = '\t') + '\n')
		except OSError as err:
			return report_error(err)
	if options.json != STDOUT:
		print_table(rows)
	return EXIT_OK


if __name__ == '__main__':
	sys.exit(main() or 0)


#  end cmaudit/scripts/cm_compare.py
