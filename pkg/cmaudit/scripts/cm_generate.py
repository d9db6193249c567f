#  cmaudit/scripts/cm_generate.py
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
Generates a perceptually uniform colormap from a JSON path specification and
writes it as CSV, JSON or hex. With "--audit" the result is audited as well and
the audit's exit status is returned. A strict-mode gamut violation exits 1
naming the offending path parameter and J'a'b'; invalid input exits 2.
"""
import sys, argparse
from dataclasses import replace
from pathlib import Path
from cmaudit import CmauditError, GamutError
from cmaudit.generator import GAMUT_MODES, PathSpec, generate
from cmaudit.io import FORMATS, CSV, SUFFIXES, colormap_text
from . import (
	EXIT_OK, EXIT_FAILED, STDOUT,
	add_verbose_argument, setup_logging, report_error, write_text
)
from .cm_audit import add_audit_arguments, check_audit_arguments, do_audit


def main(argv = None):
	"""
	Entry point for importing script from elsewhere.
	"""
	parser = argparse.ArgumentParser(prog = 'cm-generate')
	parser.add_argument('Spec', type = str,
		help = 'Path specification (JSON).')
	parser.add_argument('--output', '-o', type = str, default = STDOUT, metavar = 'PATH',
		help = 'Colormap file to write (default: standard output).')
	parser.add_argument('--format', type = str, choices = FORMATS,
		help = 'Output format (default: by file suffix, else csv).')
	parser.add_argument('--gamut', type = str, choices = ('strict', 'clip'),
		help = 'Override the gamut mode of the specification.')
	parser.add_argument('--audit', action = 'store_true',
		help = 'Audit the generated colormap and exit with the audit\'s status.')
	add_audit_arguments(parser)
	add_verbose_argument(parser)
	parser.epilog = __doc__
	options = parser.parse_args(argv)
	check_audit_arguments(parser, options)
	if options.json == STDOUT and options.output == STDOUT:
		parser.error('--json - and colormap output to standard output conflict')
	setup_logging(options)

	try:
		spec = PathSpec.from_json(options.Spec)
		if options.gamut:
			spec = replace(spec, gamut_mode = GAMUT_MODES[options.gamut])
		cmap = generate(spec)
	except GamutError as err:
		sys.stderr.write(f'{options.Spec}: {err}\n')
		return EXIT_FAILED
	except (CmauditError, OSError) as err:
		return report_error(err)

	fmt = options.format
	if fmt is None:
		fmt = CSV if options.output == STDOUT else \
			SUFFIXES.get(Path(options.output).suffix.lower(), CSV)
	try:
		write_text(options.output, colormap_text(cmap, fmt))
	except (CmauditError, OSError) as err:
		return report_error(err)

	if options.audit:
		return do_audit(cmap, options,
			sys.stderr if options.output == STDOUT else sys.stdout)
	return EXIT_OK


if __name__ == '__main__':
	sys.exit(main() or 0)


#  end cmaudit/scripts/cm_generate.py
