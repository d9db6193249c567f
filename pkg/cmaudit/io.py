#  cmaudit/io.py
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
Colormap registry (embedded colormaps plus user files), and reading / writing
colormaps as CSV, JSON and hex files.
"""
import os, logging, json
from pathlib import Path
from re import compile as rcompile
from tempfile import mkstemp
from contextlib import contextmanager, suppress
from functools import cached_property
import numpy as np
from cmaudit import (
	SEQUENTIAL, KINDS, Colormap, sig9,
	InvalidColormapError, ColormapNotFoundError, ColormapFileError
)


# ---------------------------
# Constants

EMBEDDED = 'embedded'
FILE = 'file'

CSV = 'csv'
JSON = 'json'
HEX = 'hex'
FORMATS = (CSV, JSON, HEX)

# File suffixes recognized by format "auto"
SUFFIXES = {
	'.csv'	: CSV,
	'.txt'	: CSV,
	'.json'	: JSON,
	'.hex'	: HEX
}

EMBEDDED_SAMPLES = 256

# Classic jet: (position, value) anchors per channel
JET_ANCHORS = (
	((0.0, 0.375, 0.625, 0.875, 1.0), (0.0, 0.0, 1.0, 1.0, 0.5)),
	((0.0, 0.125, 0.375, 0.625, 0.875, 1.0), (0.0, 0.0, 1.0, 1.0, 0.0, 0.0)),
	((0.0, 0.125, 0.375, 0.625, 1.0), (0.5, 1.0, 1.0, 0.0, 0.0))
)

HEX_LINE = rcompile(r'^#?([0-9a-fA-F]{2})([0-9a-fA-F]{2})([0-9a-fA-F]{2})$')


# ---------------------------
# Embedded colormaps

def jet(samples = EMBEDDED_SAMPLES):
	"""
	Returns the classic piecewise-linear jet colormap.
	"""
	positions = np.linspace(0.0, 1.0, samples)
	return Colormap('jet', np.stack([ np.interp(positions, xp, fp) for xp, fp in JET_ANCHORS ],
		axis = -1))

def gray(samples = EMBEDDED_SAMPLES):
	"""
	Returns a linear sRGB ramp from black to white.
	"""
	ramp = np.linspace(0.0, 1.0, samples)
	return Colormap('gray', np.stack([ramp, ramp, ramp], axis = -1))

def rainforest():
	"""
	Returns the CMasher "rainforest" colormap, read from the installed cmasher
	package.

	Raises InvalidColormapError if cmasher is unavailable
	"""
	try:
		import cmasher	# pylint: disable = import-outside-toplevel
	except ImportError as err:
		raise InvalidColormapError(
			'The rainforest table is read from the "cmasher" package, which is not installed',
			'rainforest') from err
	cmap = cmasher.cm.rainforest
	return Colormap('rainforest', np.asarray(cmap(np.arange(cmap.N)))[:, :3])


# ---------------------------
# Registry

class RegistryEntry:
	"""
	A named colormap known to a Registry. The colormap is built on first
	access.
	"""

	def __init__(self, name, source, loader):
		self.name = name
		self.source = source
		self._loader = loader

	def __repr__(self):
		return f'<RegistryEntry "{self.name}" ({self.source})>'

	@cached_property
	def colormap(self):
		logging.debug('Loading colormap "%s" (%s)', self.name, self.source)
		cmap = self._loader()
		return cmap if cmap.name == self.name else cmap.renamed(self.name)


class Registry:
	"""
	Case-insensitive collection of named colormaps.
	"""

	def __init__(self):
		self._entries = {}

	@classmethod
	def with_embedded(cls):
		"""
		Returns a Registry holding the embedded colormaps.
		"""
		registry = cls()
		registry.register('gray', gray)
		registry.register('jet', jet)
		registry.register('rainforest', rainforest)
		return registry

	def register(self, name, loader, source = EMBEDDED):
		"""
		Adds a colormap under "name". "loader" is either a Colormap or a callable
		returning one.

		Raises InvalidColormapError on a duplicate name
		"""
		key = name.lower()
		if key in self._entries:
			raise InvalidColormapError('A colormap with this name is already registered', name)
		if isinstance(loader, Colormap):
			cmap = loader
			loader = lambda: cmap
		entry = RegistryEntry(name, source, loader)
		self._entries[key] = entry
		return entry

	def register_file(self, path, name = None, format = 'auto'):	# pylint: disable = redefined-builtin
		"""
		Loads a colormap file and adds it with source "file". The name defaults
		to the colormap's own.

		Raises ColormapFileError, InvalidColormapError, OSError
		"""
		cmap = load_colormap(path, format)
		return self.register(name or cmap.name, cmap, FILE)

	def entry(self, name):
		"""
		Raises ColormapNotFoundError
		"""
		try:
			return self._entries[name.lower()]
		except KeyError:
			raise ColormapNotFoundError(name, self.names()) from None

	def get(self, name):
		"""
		Returns the Colormap registered as "name" (any case).

		Raises ColormapNotFoundError
		"""
		return self.entry(name).colormap

	def names(self):
		return sorted(entry.name for entry in self._entries.values())

	def __contains__(self, name):
		return name.lower() in self._entries

	def __iter__(self):
		return iter(sorted(self._entries.values(), key = lambda entry: entry.name.lower()))

	def __len__(self):
		return len(self._entries)


REGISTRY = Registry.with_embedded()

def registry_get(name):
	"""
	Returns the embedded (or registered) colormap of the given name.

	Raises ColormapNotFoundError
	"""
	return REGISTRY.get(name)


# ---------------------------
# Reading

def _format_of(path, format):	# pylint: disable = redefined-builtin
	if format != 'auto':
		if format not in FORMATS:
			raise ColormapFileError(path, None, f'Unknown colormap format "{format}"')
		return format
	return SUFFIXES.get(Path(path).suffix.lower(), CSV)

def _data_lines(text):
	"""
	Generator yielding (1-based line number, stripped line), skipping blank
	lines and "#" comments.
	"""
	for lineno, line in enumerate(text.splitlines(), 1):
		line = line.strip()
		if line and not line.startswith('#'):
			yield lineno, line

def _read_csv(path, text):
	rows, linenos = [], []
	for lineno, line in _data_lines(text):
		fields = [ field.strip() for field in line.split(',') ]
		if len(fields) != 3:
			raise ColormapFileError(path, lineno, f'Expected 3 values, found {len(fields)}')
		try:
			rows.append([ float(field) for field in fields ])
		except ValueError as err:
			raise ColormapFileError(path, lineno, f'Invalid number in "{line}"') from err
		linenos.append(lineno)
	values = np.array(rows, dtype = float).reshape(-1, 3)
	if not np.all(np.isfinite(values)):
		bad = np.flatnonzero(~np.all(np.isfinite(values), axis = 1))[0]
		raise ColormapFileError(path, linenos[bad], 'Non-finite value')
	# 8-bit when anything exceeds 1 and every value is a whole number
	if np.any(values > 1.0) and np.all(values == np.floor(values)):
		limit = 255.0
	else:
		limit = 1.0
	outside = np.flatnonzero(np.any((values < 0.0) | (values > limit), axis = 1))
	if len(outside):
		raise ColormapFileError(path, linenos[outside[0]],
			'Component outside [0, {:g}]: {}'.format(limit, ','.join(f'{v:g}' for v in values[outside[0]])))
	return values / limit, {}

def _read_hex(path, text):
	rows = []
	for lineno, line in enumerate(text.splitlines(), 1):
		line = line.strip()
		if not line:
			continue
		# "#RRGGBB" is a color; any other line starting with "#" is a comment
		if match := HEX_LINE.match(line):
			rows.append([ int(group, 16) for group in match.groups() ])
		elif not line.startswith('#'):
			raise ColormapFileError(path, lineno, f'Invalid hex color "{line}"')
	return np.array(rows, dtype = float).reshape(-1, 3) / 255.0, {}

def _read_json(path, text):
	try:
		data = json.loads(text)
	except json.JSONDecodeError as err:
		raise ColormapFileError(path, err.lineno, err.msg) from err
	if not isinstance(data, dict) or 'colors' not in data:
		raise ColormapFileError(path, None, 'Expected an object with a "colors" list')
	colors = data['colors']
	if not isinstance(colors, list) or \
		not all(isinstance(color, list) and len(color) == 3 for color in colors):
		raise ColormapFileError(path, None, '"colors" must be a list of [r, g, b] triples')
	try:
		values = np.array(colors, dtype = float).reshape(-1, 3)
	except (TypeError, ValueError) as err:
		raise ColormapFileError(path, None, 'Colors must be numbers') from err
	outside = np.flatnonzero(np.any((values < 0.0) | (values > 1.0), axis = 1))
	if len(outside):
		raise ColormapFileError(path, None,
			'Color {} ({}) is outside [0, 1]'.format(outside[0],
			', '.join(f'{v:g}' for v in values[outside[0]])))
	attributes = {}
	if 'name' in data:
		attributes['name'] = str(data['name'])
	if data.get('kind') is not None:
		if data['kind'] not in KINDS:
			raise ColormapFileError(path, None, f'Invalid kind "{data["kind"]}"')
		attributes['kind'] = data['kind']
	if data.get('center') is not None:
		attributes['center'] = data['center']
	return values, attributes

READERS = {
	CSV		: _read_csv,
	JSON	: _read_json,
	HEX		: _read_hex
}

def load_colormap(path, format = 'auto', name = None, kind = None):	# pylint: disable = redefined-builtin
	"""
	Reads a colormap file.

	"format" is one of "auto", "csv", "json", "hex"; "auto" decides by file
	suffix and falls back to CSV. CSV holds one "r,g,b" row per sample, as
	floats in [0, 1] or as integers in [0, 255]; the latter is assumed when any
	value exceeds 1 and all values are whole numbers. Hex files hold one
	"#RRGGBB" per line, with other lines starting with "#" taken as comments.
	The colormap is named
	after the file stem unless the file (JSON) or "name" says otherwise.

	Raises ColormapFileError, OSError
	"""
	path = Path(path)
	fmt = _format_of(path, format)
	text = path.read_text(encoding = 'utf-8')
	values, attributes = READERS[fmt](path, text)
	if len(values) < 2:
		raise ColormapFileError(path, None, f'A colormap needs at least 2 samples, found {len(values)}')
	attributes.setdefault('name', path.stem)
	if name:
		attributes['name'] = name
	if kind:
		attributes['kind'] = kind
	attributes.setdefault('kind', SEQUENTIAL)
	try:
		cmap = Colormap(attributes.pop('name'), values, **attributes)
	except InvalidColormapError as err:
		raise ColormapFileError(path, None, str(err)) from err
	logging.debug('Loaded %s from %s', cmap, path)
	return cmap


# ---------------------------
# Writing

@contextmanager
def atomic_write(path):
	"""
	Context manager yielding a text file object which replaces "path" only when
	the block completes without error.

	Raises OSError naming "path"
	"""
	path = Path(path)
	try:
		handle, temp_name = mkstemp(dir = path.resolve().parent, prefix = f'.{path.name}.', suffix = '.tmp')
	except OSError as err:
		raise OSError(err.errno, err.strerror, str(path)) from err
	try:
		with os.fdopen(handle, 'w', encoding = 'utf-8', newline = '\n') as fob:
			yield fob
		os.replace(temp_name, path)
	except BaseException:
		with suppress(FileNotFoundError):
			os.unlink(temp_name)
		raise

def to_hex(samples):
	"""
	Returns list of "#RRGGBB" strings; components are rounded half-to-even.
	"""
	values = np.rint(np.asarray(samples, dtype = float) * 255.0).astype(int)
	return [ '#{:02X}{:02X}{:02X}'.format(*row) for row in values ]

def colormap_text(cmap, format = CSV):	# pylint: disable = redefined-builtin
	"""
	Returns the colormap serialized in the given format.
	"""
	if format == CSV:
		return ''.join(f'{r:.6f},{g:.6f},{b:.6f}\n' for r, g, b in cmap.samples)
	if format == HEX:
		return ''.join(f'{line}\n' for line in to_hex(cmap.samples))
	if format == JSON:
		data = {
			'name'		: cmap.name,
			'kind'		: cmap.kind,
			'colors'	: [ [ sig9(value) for value in row ] for row in cmap.samples ]
		}
		if cmap.center is not None:
			data['center'] = sig9(cmap.center)
		return json.dumps(data) + '\n'
	raise ColormapFileError(cmap.name, None, f'Unknown colormap format "{format}"')

def save_colormap(cmap, path, format = 'auto'):	# pylint: disable = redefined-builtin
	"""
	Writes the colormap as "csv" (6 decimals), "json" or "hex". "auto" decides
	by file suffix and falls back to CSV. The file is replaced atomically.

	Raises ColormapFileError, OSError
	"""
	text = colormap_text(cmap, _format_of(path, format))
	with atomic_write(path) as fob:
		fob.write(text)
	logging.debug('Saved %s to %s', cmap, path)


#  end cmaudit/io.py
