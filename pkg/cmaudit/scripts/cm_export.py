#  cmaudit/scripts/cm_export.py
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
Exports a colormap as CSV, JSON or hex, optionally transformed. Transforms are
applied in this order: sub-map, reverse, CVD simulation, grayscale,
qualitative sampling.
"""
import sys, argparse
from pathlib import Path
from cmaudit import CmauditError
from cmaudit.cvd import CvdSpec, simulate_cvd, to_grayscale
from cmaudit.generator import sub_map, qualitative_from
from cmaudit.io import FORMATS, CSV, SUFFIXES, colormap_text
from . import (
	EXIT_OK, STDOUT,
	add_verbose_argument, add_input_format_argument, setup_logging,
	resolve_target, report_error, write_text
)


def transform(cmap, options):
	"""
	Returns the colormap with the transforms requested on the command line.

	Raises DomainError
	"""
	if options.sub:
		cmap = sub_map(cmap, options.sub[0], options.sub[1], options.samples)
	if options.reverse:
		cmap = cmap.reversed()
	if options.cvd:
		cmap = simulate_cvd(cmap, CvdSpec.parse(options.cvd))
	if options.grayscale:
		cmap = to_grayscale(cmap)
	if options.qualitative:
		cmap = qualitative_from(cmap, options.qualitative)
	if options.name:
		cmap = cmap.renamed(options.name)
	return cmap


def main(argv = None):
	"""
	Entry point for importing script from elsewhere.
	"""
	parser = argparse.ArgumentParser(prog = 'cm-export')
	parser.add_argument('Target', type = str,
		help = 'Colormap name or colormap file.')
	parser.add_argument('--output', '-o', type = str, default = STDOUT, metavar = 'PATH',
		help = 'File to write (default: standard output).')
	parser.add_argument('--format', type = str, choices = FORMATS,
		help = 'Output format (default: by file suffix, else csv).')
	parser.add_argument('--name', type = str,
		help = 'Name given to the exported colormap (JSON format).')
	parser.add_argument('--sub', type = float, nargs = 2, metavar = ('A', 'B'),
		help = 'Keep only the part between fractions A and B.')
	parser.add_argument('--samples', type = int, metavar = 'N',
		help = 'Sample count of the sub-map (default: unchanged).')
	parser.add_argument('--reverse', '-r', action = 'store_true',
		help = 'Reverse the colormap.')
	parser.add_argument('--cvd', type = str, metavar = 'KIND[:SEVERITY]',
		help = 'Simulate a color-vision deficiency: protan, deutan or tritan, severity 0-100 (default 100).')
	parser.add_argument('--grayscale', '-g', action = 'store_true',
		help = 'Convert to the grays of equal lightness.')
	parser.add_argument('--qualitative', '-Q', type = int, metavar = 'N',
		help = 'Pick N evenly spaced colors for categorical data.')
	add_input_format_argument(parser)
	add_verbose_argument(parser)
	parser.epilog = __doc__
	options = parser.parse_args(argv)
	if options.samples is not None and not options.sub:
		parser.error('--samples applies to --sub only')
	setup_logging(options)

	fmt = options.format
	if fmt is None:
		fmt = CSV if options.output == STDOUT else \
			SUFFIXES.get(Path(options.output).suffix.lower(), CSV)
	try:
		cmap = transform(resolve_target(options.Target, options.input_format), options)
		write_text(options.output, colormap_text(cmap, fmt))
	except (CmauditError, OSError) as err:
		return report_error(err)
	return EXIT_OK


if __name__ == '__main__':
	sys.exit(main() or 0)


#  end cmaudit/scripts/cm_export.py
