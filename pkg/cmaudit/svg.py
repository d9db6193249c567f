#  cmaudit/svg.py
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
Renders an AuditReport as a standalone SVG sheet of diagnostic panels.

Output depends only on the report, so identical reports give byte-identical
files.
"""
import logging
from collections import Counter
from xml.sax.saxutils import escape, quoteattr
import numpy as np
from cmaudit.io import atomic_write, to_hex
from cmaudit.metrics import NORMAL, GRAYSCALE


# ---------------------------
# Layout

COLUMNS = 2
PANEL_WIDTH = 420
PANEL_HEIGHT = 180
GAP = 20
HEADER = 44

# Plot area inside a panel
PAD_LEFT = 46
PAD_RIGHT = 12
PAD_TOP = 26
PAD_BOTTOM = 22

STRIP_HEIGHT = 34
MAX_STRIP_RECTS = 256

FONT = 'font-family="sans-serif" font-size="11"'


# ---------------------------
# Primitives

def _num(value):
	return f'{value:.2f}'

def _text(x, y, string, anchor = 'start', css = 'label'):
	return f'<text class="{css}" x="{_num(x)}" y="{_num(y)}" text-anchor="{anchor}">{escape(string)}</text>'

def _strip(samples, x, y, width, height):
	"""
	Returns list of SVG elements drawing the samples as adjacent rectangles.
	"""
	count = min(len(samples), MAX_STRIP_RECTS)
	indices = np.floor(np.arange(count) * (len(samples) - 1) / max(count - 1, 1) + 0.5).astype(int)
	step = width / count
	return [ '<g class="strip">' ] + [
		f'<rect x="{_num(x + i * step)}" y="{_num(y)}" width="{_num(step + 0.5 if i < count - 1 else step)}" '
		f'height="{_num(height)}" fill="{color}"/>'
		for i, color in enumerate(to_hex(samples[indices]))
	] + [ '</g>' ]

def _series(values, x, y, width, height, top, css = 'series', stroke = '#000000'):
	"""
	Returns a polyline plotting "values" over the box; "top" is the value
	drawn at the upper edge, 0 at the lower edge (data-y0).
	"""
	values = np.asarray(values, dtype = float)
	xs = x + width * np.arange(len(values)) / max(len(values) - 1, 1)
	ys = y + height * (1.0 - values / top)
	points = ' '.join(f'{_num(px)},{_num(py)}' for px, py in zip(xs, ys))
	dash = ' stroke-dasharray="4,3"' if css == 'reference' else ''
	return f'<polyline class="{css}" data-y0="{_num(y + height)}" fill="none" stroke="{stroke}" ' \
		f'stroke-width="1.2"{dash} points="{points}"/>'

def _frame(x, y, width, height):
	return f'<rect class="frame" x="{_num(x)}" y="{_num(y)}" width="{_num(width)}" ' \
		f'height="{_num(height)}" fill="none" stroke="#888888"/>'

def _axis_labels(x, y, height, top, unit):
	return [
		_text(x - 4, y + 4, f'{top:.4g}', 'end', 'tick'),
		_text(x - 4, y + height, '0', 'end', 'tick'),
		_text(x - 30, y + height / 2, unit, 'middle', 'axis')
	]

def _top(values):
	top = float(np.max(values)) * 1.1 if len(values) else 0.0
	return top if top > 0.0 else 1.0


# ---------------------------
# Panels

class _Panel:
	"""
	Accumulates the elements of one panel at its grid position.
	"""

	def __init__(self, index, name, title):
		self.name = name
		self.x = GAP + (index % COLUMNS) * (PANEL_WIDTH + GAP)
		self.y = HEADER + (index // COLUMNS) * (PANEL_HEIGHT + GAP)
		self.elements = [ _text(self.x + 8, self.y + 16, title, css = 'title') ]
		self.left = self.x + PAD_LEFT
		self.top = self.y + PAD_TOP
		self.width = PANEL_WIDTH - PAD_LEFT - PAD_RIGHT
		self.height = PANEL_HEIGHT - PAD_TOP - PAD_BOTTOM

	def render(self):
		return [
			f'<g class="panel" id={quoteattr("panel-" + self.name)}>',
			f'<rect x="{_num(self.x)}" y="{_num(self.y)}" width="{PANEL_WIDTH}" height="{PANEL_HEIGHT}" '
			'fill="#ffffff" stroke="#cccccc"/>'
		] + self.elements + [ '</g>' ]


def _strip_panel(index, name, title, profile):
	panel = _Panel(index, name, title)
	panel.elements.extend(_strip(profile.colormap.samples,
		panel.left, panel.top, panel.width, panel.height))
	return panel

def _curve_panel(index, name, title, values, top, unit):
	panel = _Panel(index, name, title)
	panel.elements.append(_frame(panel.left, panel.top, panel.width, panel.height))
	panel.elements.extend(_axis_labels(panel.left, panel.top, panel.height, top, unit))
	panel.elements.append(_series(values, panel.left, panel.top, panel.width, panel.height, top))
	return panel

def _path_panel(index, profile):
	panel = _Panel(index, 'path', 'Path in (a′, b′)')
	size = panel.height
	left = panel.x + (PANEL_WIDTH - size) / 2
	jab = profile.jab
	extent = max(float(np.max(np.abs(jab[:, 1:]))), 1.0) * 1.1
	centre_x, centre_y = left + size / 2, panel.top + size / 2
	xs = centre_x + jab[:, 1] / extent * size / 2
	ys = centre_y - jab[:, 2] / extent * size / 2
	points = ' '.join(f'{_num(px)},{_num(py)}' for px, py in zip(xs, ys))
	panel.elements.extend([
		_frame(left, panel.top, size, size),
		f'<line class="axis" x1="{_num(left)}" y1="{_num(centre_y)}" x2="{_num(left + size)}" '
		f'y2="{_num(centre_y)}" stroke="#cccccc"/>',
		f'<line class="axis" x1="{_num(centre_x)}" y1="{_num(panel.top)}" x2="{_num(centre_x)}" '
		f'y2="{_num(panel.top + size)}" stroke="#cccccc"/>',
		f'<polyline class="series" fill="none" stroke="#000000" stroke-width="1.2" points="{points}"/>',
		f'<circle class="start" cx="{_num(xs[0])}" cy="{_num(ys[0])}" r="3" fill="#000000"/>',
		_text(left + size + 4, centre_y + 4, 'a′', css = 'axis'),
		_text(centre_x, panel.top - 3, 'b′', 'middle', 'axis'),
		_text(left - 4, panel.top + 10, f'±{extent:.4g}', 'end', 'tick')
	])
	return panel

def _summary_panel(index, report):
	panel = _Panel(index, 'summary', 'Summary')
	normal = report.profiles[NORMAL]
	thresholds = report.options.thresholds()
	lines = [
		f'{report.colormap.name} ({report.colormap.kind}, N={len(report.colormap)})',
		f'perceptual range {normal.range:.4f}',
		f'uniformity RMS {normal.uniformity_rms:.4f} (max {thresholds["uniformityRms"]:g})',
		f'smoothness {normal.smoothness:.4f} rad (max {thresholds["smoothness"]:g})',
		f'CVD consistency {report.cvd_consistency:.4f} (max {thresholds["cvdConsistency"]:g})'
	] + [
		f'{"PASS" if verdict else "FAIL"}  {name}' for name, verdict in report.verdicts.items()
	]
	for line_index, line in enumerate(lines):
		panel.elements.append(_text(panel.x + 12, panel.top + 4 + line_index * 14, line))
	return panel

def _cvd_panel(index, name, label, profile, normal):
	panel = _Panel(index, name, f'{label}: strip and ΔE')
	panel.elements.extend(_strip(profile.colormap.samples,
		panel.left, panel.top, panel.width, STRIP_HEIGHT))
	top_y = panel.top + STRIP_HEIGHT + 6
	height = panel.height - STRIP_HEIGHT - 6
	top = _top(np.concatenate([normal.deltas, profile.deltas]))
	panel.elements.append(_frame(panel.left, top_y, panel.width, height))
	panel.elements.extend(_axis_labels(panel.left, top_y, height, top, 'ΔE'))
	panel.elements.append(_series(normal.deltas, panel.left, top_y, panel.width, height, top,
		'reference', '#999999'))
	panel.elements.append(_series(profile.deltas, panel.left, top_y, panel.width, height, top))
	return panel

def _panel_names(labels):
	"""
	Returns the labels made unique by numbering repeats, as "deutan100",
	"deutan100-2".
	"""
	seen = Counter()
	names = []
	for label in labels:
		seen[label] += 1
		names.append(label if seen[label] == 1 else f'{label}-{seen[label]}')
	return names


# ---------------------------
# Sheet

def svg_text(report):
	"""
	Returns (str) the SVG document of the report's diagnostic sheet.
	"""
	normal = report.profiles[NORMAL]
	labels = [ spec.label for spec in report.options.cvd_specs() ]
	panels = [
		_strip_panel(0, 'colormap', 'Colormap', normal),
		_curve_panel(1, 'lightness', 'Lightness J′', normal.lightness, 100.0, 'J′'),
		_curve_panel(2, 'derivative', 'Perceptual derivative ΔE', normal.deltas,
			_top(normal.deltas), 'ΔE'),
		_path_panel(3, normal),
		_strip_panel(4, 'grayscale', 'Grayscale', report.profiles[GRAYSCALE]),
		_summary_panel(5, report)
	] + [
		_cvd_panel(6 + i, name, label, report.profiles[label], normal) \
		for i, (name, label) in enumerate(zip(_panel_names(labels), labels))
	]
	rows = (len(panels) + COLUMNS - 1) // COLUMNS
	width = COLUMNS * PANEL_WIDTH + (COLUMNS + 1) * GAP
	height = HEADER + rows * (PANEL_HEIGHT + GAP)
	lines = [
		'<?xml version="1.0" encoding="UTF-8"?>',
		f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
		f'viewBox="0 0 {width} {height}" {FONT}>',
		f'<rect width="{width}" height="{height}" fill="#f4f4f4"/>',
		_text(GAP, 28, f'Colormap audit: {report.colormap.name}', css = 'heading')
	]
	for panel in panels:
		lines.extend(panel.render())
	lines.append('</svg>')
	return '\n'.join(lines) + '\n'

def render_svg(report, path):
	"""
	Writes the report's diagnostic sheet to "path" (atomically).

	Raises OSError
	"""
	text = svg_text(report)
	with atomic_write(path) as fob:
		fob.write(text)
	logging.debug('Wrote SVG sheet of %s to %s', report.colormap.name, path)


#  end cmaudit/svg.py
