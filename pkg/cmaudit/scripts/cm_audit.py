#  cmaudit/scripts/cm_audit.py
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
Audits a colormap for perceptual uniformity, lightness monotonicity, grayscale
safety and CVD friendliness. The target is a registered colormap name (see
cm-list) or a colormap file. Exits 0 if every verdict passes, 1 if any fails,
and 2 on input errors.
"""
import sys, argparse
from pathlib import Path
from cmaudit import CmauditError
from cmaudit.metrics import (
	NORMAL, AuditOptions, audit,
	UNIFORMITY_THRESHOLD, SMOOTHNESS_THRESHOLD, CVD_THRESHOLD, ANOMALY_SEVERITY
)
from cmaudit.svg import render_svg
from . import (
	EXIT_OK, EXIT_FAILED, STDOUT,
	add_verbose_argument, add_input_format_argument, setup_logging,
	resolve_target, report_error, write_text
)


def add_audit_arguments(parser):
	"""
	Adds the report and threshold options, shared with cm-generate.
	"""
	parser.add_argument('--json', type = str, metavar = 'PATH',
		help = 'Write the audit report as JSON ("-" for standard output).')
	parser.add_argument('--svg', type = str, metavar = 'PATH',
		help = 'Write the diagnostic panel sheet as SVG.')
	parser.add_argument('--anomaly-severity', type = float, default = ANOMALY_SEVERITY,
		metavar = 'N', help = f'CVD severity (percent) of the "anomaly" variants (default {ANOMALY_SEVERITY:g}).')
	parser.add_argument('--threshold-uniformity', type = float, default = UNIFORMITY_THRESHOLD,
		metavar = 'X', help = f'Largest passing uniformity RMS (default {UNIFORMITY_THRESHOLD:g}).')
	parser.add_argument('--threshold-smoothness', type = float, default = SMOOTHNESS_THRESHOLD,
		metavar = 'X', help = f'Largest passing turning angle, radians (default {SMOOTHNESS_THRESHOLD:g}).')
	parser.add_argument('--threshold-cvd', type = float, default = CVD_THRESHOLD,
		metavar = 'X', help = f'Largest passing CVD consistency (default {CVD_THRESHOLD:g}).')
	parser.add_argument('--workers', type = int, default = 1, metavar = 'N',
		help = 'Evaluate the variants on N threads. Output does not depend on N.')
	parser.add_argument('--quiet', '-q', action = 'store_true',
		help = 'Print nothing; the exit status reflects the verdicts.')

def check_audit_arguments(parser, options):
	"""
	Rejects conflicting output destinations before any work starts.
	"""
	if options.json and options.svg and options.json != STDOUT \
		and Path(options.json).resolve() == Path(options.svg).resolve():
		parser.error('--json and --svg must name different files')
	if options.svg == STDOUT:
		parser.error('--svg needs a file name')

def audit_options(options):
	"""
	Returns AuditOptions built from the parsed command line.

	Raises ConfigurationError
	"""
	return AuditOptions(
		uniformity = options.threshold_uniformity,
		smoothness = options.threshold_smoothness,
		cvd = options.threshold_cvd,
		anomaly_severity = options.anomaly_severity,
		workers = options.workers
	)

def print_summary(report, stream = None):
	stream = stream or sys.stdout
	normal = report.profiles[NORMAL]
	thresholds = report.options.thresholds()
	cmap = report.colormap
	stream.write(f'{cmap.name} ({cmap.kind}, N={len(cmap)})\n')
	stream.write(f'  perceptual range  {normal.range:12.4f}\n')
	stream.write(f'  uniformity RMS    {normal.uniformity_rms:12.4f}  (max {thresholds["uniformityRms"]:g})\n')
	stream.write(f'  smoothness        {normal.smoothness:12.4f}  (max {thresholds["smoothness"]:g})\n')
	stream.write(f'  CVD consistency   {report.cvd_consistency:12.4f}  (max {thresholds["cvdConsistency"]:g})\n')
	stream.write(f'  J\' monotonicity   {normal.monotonicity:>12s}\n')
	for name, verdict in report.verdicts.items():
		stream.write(f'  {"PASS" if verdict else "FAIL"}  {name}\n')

def do_audit(cmap, options, stream = None):
	"""
	Audits "cmap", writes the requested artifacts and returns the exit status.
	"""
	try:
		report = audit(cmap, options = audit_options(options))
		if options.json:
			write_text(options.json, report.to_json())
		if options.svg:
			render_svg(report, options.svg)
	except (CmauditError, OSError) as err:
		return report_error(err)
	if not options.quiet and options.json != STDOUT:
		print_summary(report, stream)
	return EXIT_OK if report.passed else EXIT_FAILED


def main(argv = None):
	"""
	Entry point for importing script from elsewhere.
	"""
	parser = argparse.ArgumentParser(prog = 'cm-audit')
	parser.add_argument('Target', type = str,
		help = 'Colormap name or colormap file.')
	add_audit_arguments(parser)
	add_input_format_argument(parser)
	add_verbose_argument(parser)
	parser.epilog = __doc__
	options = parser.parse_args(argv)
	check_audit_arguments(parser, options)
	setup_logging(options)

	try:
		cmap = resolve_target(options.Target, options.input_format)
	except (CmauditError, OSError) as err:
		return report_error(err)
	return do_audit(cmap, options)


if __name__ == '__main__':
	sys.exit(main() or 0)


#  end cmaudit/scripts/cm_audit.py
