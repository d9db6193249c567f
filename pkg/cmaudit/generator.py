#  cmaudit/generator.py
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
Generates perceptually uniform colormaps from a declarative path: a smooth
curve through control points in the (a', b') plane with a linear J' ramp,
sampled densely, reparameterized by arc length and converted to sRGB.

Also provides sub-map extraction and qualitative sampling of existing maps.
"""
import logging, json
from dataclasses import dataclass, replace
import numpy as np
from cmaudit import (
	SEQUENTIAL, DIVERGING, CYCLIC, QUALITATIVE, Colormap, sig9,
	DomainError, DegenerateColormapError, GamutError, PathSpecError
)
from cmaudit.colorspace import JabColor, delta_e, gamut_excess, jab_to_srgb, GAMUT_TOLERANCE


# ---------------------------
# Constants

STRICT = 'strict'
CLIP_CHROMA = 'clipChroma'

# Accepted spellings of the gamut modes
GAMUT_MODES = {
	'strict'		: STRICT,
	'clip'			: CLIP_CHROMA,
	'clipchroma'	: CLIP_CHROMA
}

DENSE_POINTS = 4096
DEFAULT_SAMPLES = 256

# Chroma bisection stops once the bracket along (a', b') is narrower than
# this, in J'a'b' units
CHROMA_TOLERANCE = 1e-4


# ---------------------------
# Path specification

@dataclass(frozen = True)
class PathSpec:
	"""
	Declarative description of a generated colormap.

	A sequential spec runs J' from lightness[0] to lightness[1] along a curve
	through "control_points" in the (a', b') plane. A diverging spec is two
	sequential halves: lightness[0] -> center through "control_points", then
	center -> lightness[1] through "second_control_points", which must start
	where the first half ends.

	Raises PathSpecError
	"""

	name: str
	lightness: tuple
	control_points: tuple
	kind: str = SEQUENTIAL
	samples: int = DEFAULT_SAMPLES
	gamut_mode: str = STRICT
	center: float = None
	second_control_points: tuple = None

	def __post_init__(self):
		if not self.name or not isinstance(self.name, str):
			raise PathSpecError('Path spec needs a name')
		if self.kind in (CYCLIC, QUALITATIVE):
			raise PathSpecError(f'Generating {self.kind} colormaps is not supported', self.name)
		if self.kind not in (SEQUENTIAL, DIVERGING):
			raise PathSpecError(f'Invalid kind "{self.kind}"', self.name)
		if self.gamut_mode not in (STRICT, CLIP_CHROMA):
			raise PathSpecError(f'Invalid gamut mode "{self.gamut_mode}"', self.name)
		if isinstance(self.samples, bool) or int(self.samples) != self.samples \
			or self.samples < (3 if self.kind == DIVERGING else 2):
			raise PathSpecError(f'Invalid sample count {self.samples}', self.name)
		object.__setattr__(self, 'samples', int(self.samples))
		object.__setattr__(self, 'lightness', self._lightness(self.lightness))
		object.__setattr__(self, 'control_points', self._points(self.control_points))
		if self.kind == DIVERGING:
			if self.center is None or self.second_control_points is None:
				raise PathSpecError('A diverging spec needs a center and second-half control points',
					self.name)
			object.__setattr__(self, 'center', self._lightness([self.center], 1)[0])
			object.__setattr__(self, 'second_control_points',
				self._points(self.second_control_points))
			if self.second_control_points[0] != self.control_points[-1]:
				raise PathSpecError(
					'The second half must start at the last control point of the first half',
					self.name)
			if self.center in self.lightness:
				raise PathSpecError('The center lightness must differ from both ends', self.name)
		elif self.lightness[0] == self.lightness[1]:
			raise PathSpecError('Start and end lightness must differ', self.name)

	def _lightness(self, values, count = 2):
		try:
			values = tuple(float(value) for value in values)
		except (TypeError, ValueError) as err:
			raise PathSpecError(f'Invalid lightness {values!r}', self.name) from err
		for value in values:
			if not 0.0 <= value <= 100.0:
				raise PathSpecError(f'Lightness {value} is outside [0, 100]', self.name)
		if len(values) != count:
			raise PathSpecError(f'Expected {count} lightness value(s), got {len(values)}', self.name)
		return values

	def _points(self, points):
		try:
			points = tuple((float(a), float(b)) for a, b in points)
		except (TypeError, ValueError) as err:
			raise PathSpecError('Control points must be [a, b] pairs', self.name) from err
		if len(points) < 2:
			raise PathSpecError('At least 2 control points are required', self.name)
		if not np.all(np.isfinite(points)):
			raise PathSpecError('Control points must be finite', self.name)
		return points

	@classmethod
	def from_dict(cls, data):
		"""
		Creates a PathSpec from its JSON form:

			{name, kind, lightness: [start, end], controlPoints: [[a, b], ...],
			samples, gamutMode, diverging: {center, secondHalfControlPoints}}
		"""
		if not isinstance(data, dict):
			raise PathSpecError('Path spec must be a JSON object')
		name = data.get('name')
		try:
			mode = GAMUT_MODES[str(data.get('gamutMode', STRICT)).lower()]
		except KeyError as err:
			raise PathSpecError(f'Invalid gamut mode "{data["gamutMode"]}"', name) from err
		diverging = data.get('diverging') or {}
		try:
			return cls(
				name = name,
				kind = data.get('kind', SEQUENTIAL),
				lightness = data['lightness'],
				control_points = data['controlPoints'],
				samples = data.get('samples', DEFAULT_SAMPLES),
				gamut_mode = mode,
				center = diverging.get('center'),
				second_control_points = diverging.get('secondHalfControlPoints')
			)
		except PathSpecError:
			raise
		except KeyError as err:
			raise PathSpecError(f'Missing key {err}', name) from err
		except (TypeError, ValueError) as err:
			raise PathSpecError(str(err), name) from err

	@classmethod
	def from_json(cls, filename):
		"""
		Reads a PathSpec from a JSON file.

		Raises PathSpecError, OSError
		"""
		with open(filename, 'r', encoding = 'utf-8') as fob:
			try:
				data = json.load(fob)
			except json.JSONDecodeError as err:
				raise PathSpecError(f'{filename}, line {err.lineno}: {err.msg}') from err
		return cls.from_dict(data)

	def halves(self):
		"""
		Returns (first, second) sequential specs of a diverging spec. Their
		sample counts add up to one more than this spec's, as they share the
		center sample.
		"""
		if self.kind != DIVERGING:
			raise PathSpecError('Only diverging specs have halves', self.name)
		return (
			replace(self, kind = SEQUENTIAL, lightness = (self.lightness[0], self.center),
				samples = self.samples // 2 + 1, center = None, second_control_points = None),
			replace(self, kind = SEQUENTIAL, lightness = (self.center, self.lightness[1]),
				control_points = self.second_control_points,
				samples = self.samples - self.samples // 2, center = None,
				second_control_points = None)
		)

	@property
	def center_fraction(self):
		"""
		Position of the center sample in a generated diverging map.
		"""
		return (self.samples // 2) / (self.samples - 1)


# ---------------------------
# Dense path

@dataclass
class DensePath:
	"""
	A path sampled on a fine parameter grid, with the cumulative delta E
	length at every grid point.
	"""

	t: np.ndarray
	jab: np.ndarray
	cumulative: np.ndarray
	name: str = 'path'

	@classmethod
	def from_points(cls, jab, t = None, name = 'path'):
		jab = np.asarray(jab, dtype = float)
		if t is None:
			t = np.linspace(0.0, 1.0, len(jab))
		cumulative = np.concatenate([[0.0], np.cumsum(delta_e(jab[:-1], jab[1:]))])
		return cls(np.asarray(t, dtype = float), jab, cumulative, name)

	@property
	def length(self):
		return float(self.cumulative[-1])


def _tangents(points):
	tangents = np.empty_like(points)
	tangents[0] = points[1] - points[0]
	tangents[-1] = points[-1] - points[-2]
	tangents[1:-1] = (points[2:] - points[:-2]) / 2.0
	return tangents

def evaluate_path(spec, t):
	"""
	Returns the J'a'b' point at parameter "t" of a sequential spec: a JabColor
	for a scalar "t", an (..., 3) array for an array of them.

	(a', b') follows a composite cubic Bezier through the control points, one
	segment per pair, with Catmull-Rom tangents (one-sided at the ends). J'
	is linear in t. A diverging spec has no single path; evaluate its halves().

	Raises DomainError, PathSpecError
	"""
	if spec.kind == DIVERGING:
		raise PathSpecError('Diverging specs are evaluated one half at a time', spec.name)
	scalar = np.ndim(t) == 0
	t = np.asarray(t, dtype = float)
	if not np.all(np.isfinite(t)) or np.any((t < 0.0) | (t > 1.0)):
		raise DomainError('Path parameter t must be in [0, 1]', t)
	points = np.array(spec.control_points)
	tangents = _tangents(points)
	segments = len(points) - 1
	index = np.minimum(np.floor(t * segments).astype(int), segments - 1)
	u = (t * segments - index)[..., None]
	b0 = points[index]
	b1 = b0 + tangents[index] / 3.0
	b3 = points[index + 1]
	b2 = b3 - tangents[index + 1] / 3.0
	v = 1.0 - u
	ab = v * v * v * b0 + 3.0 * v * v * u * b1 + 3.0 * v * u * u * b2 + u * u * u * b3
	start, end = spec.lightness
	jp = (1.0 - t) * start + t * end
	jab = np.concatenate([jp[..., None], ab], axis = -1)
	return JabColor(*(float(value) for value in jab)) if scalar else jab

def dense_path(spec, points = DENSE_POINTS):
	"""
	Returns a DensePath sampling the spec at "points" evenly spaced parameters.
	"""
	t = np.linspace(0.0, 1.0, points)
	path = DensePath.from_points(evaluate_path(spec, t), t, spec.name)
	logging.debug('%s: dense path length %.6f', spec.name, path.length)
	return path

def _reparameterize(path, count):
	"""
	Returns (t, jab) of "count" points evenly spaced by arc length.
	"""
	if not path.length > 0.0:
		raise DegenerateColormapError(path.name, 'the path has zero length')
	if count < 2:
		raise DomainError(f'Sample count must be at least 2, got {count}', count)
	keep = np.concatenate([[True], np.diff(path.cumulative) > 0.0])
	lengths = path.cumulative[keep]
	targets = np.linspace(0.0, path.length, count)
	targets[-1] = lengths[-1]
	t = np.interp(targets, lengths, path.t[keep])
	jab = np.stack([ np.interp(targets, lengths, path.jab[keep, channel]) \
		for channel in range(3) ], axis = -1)
	return t, jab

def reparameterize(path, count):
	"""
	Returns an array of "count" J'a'b' points along the path whose cumulative
	delta E positions are evenly spaced on [0, length], found by piecewise
	linear inversion of the cumulative length table.

	Raises DegenerateColormapError
	"""
	return _reparameterize(path, count)[1]


# ---------------------------
# Gamut resolution

def clip_chroma(jab, vc = None):
	"""
	Scales (a', b') of every out-of-gamut point toward the neutral axis by
	bisection until it fits sRGB. J' is untouched.

	Returns (jab, chroma scale factor per point)
	"""
	jab = np.array(jab, dtype = float)
	scale = np.ones(len(jab))
	outside = gamut_excess(jab, vc)[1] > GAMUT_TOLERANCE
	if np.any(outside):
		lo = np.zeros(np.count_nonzero(outside))
		hi = np.ones_like(lo)
		base = jab[outside]
		chroma = np.hypot(base[:, 1], base[:, 2])
		while np.max((hi - lo) * chroma) > CHROMA_TOLERANCE:
			mid = 0.5 * (lo + hi)
			trial = np.concatenate([base[:, :1], base[:, 1:] * mid[:, None]], axis = -1)
			fits = gamut_excess(trial, vc)[1] <= GAMUT_TOLERANCE
			lo = np.where(fits, mid, lo)
			hi = np.where(fits, hi, mid)
		scale[outside] = lo
		jab[outside, 1:] *= lo[:, None]
	return jab, scale

def generate_jab(spec, vc = None):
	"""
	Returns (t, jab, max chroma reduction) of a sequential spec: the arc-length
	reparameterized samples after gamut resolution. The chroma reduction is
	None in strict mode.

	Raises GamutError (strict mode), DegenerateColormapError
	"""
	t, jab = _reparameterize(dense_path(spec), spec.samples)
	if spec.gamut_mode == STRICT:
		excess = gamut_excess(jab, vc)[1]
		if np.any(excess > GAMUT_TOLERANCE):
			worst = int(np.argmax(excess))
			raise GamutError(jab[worst], t = float(t[worst]))
		return t, jab, None
	jab, scale = clip_chroma(jab, vc)
	reduction = float(1.0 - np.min(scale))
	if reduction > 0.0:
		logging.warning('%s: chroma reduced by up to %.1f%% to fit sRGB',
			spec.name, 100.0 * reduction)
	return t, jab, reduction

def generate(spec, vc = None):
	"""
	Builds the Colormap described by a PathSpec. A diverging spec generates
	both halves and joins them, dropping the duplicated center sample.

	In clipChroma mode the largest relative chroma reduction is recorded in
	the colormap's metadata as "maxChromaReduction".

	Raises GamutError (strict mode), DegenerateColormapError
	"""
	if spec.kind == DIVERGING:
		first, second = spec.halves()
		_, jab_first, red_first = generate_jab(first, vc)
		_, jab_second, red_second = generate_jab(second, vc)
		jab = np.concatenate([jab_first, jab_second[1:]])
		reduction = None if spec.gamut_mode == STRICT else max(red_first, red_second)
		center = spec.center_fraction
	else:
		_, jab, reduction = generate_jab(spec, vc)
		center = None
	metadata = {} if reduction is None else { 'maxChromaReduction': sig9(reduction) }
	return Colormap(spec.name, jab_to_srgb(jab, vc),
		kind = spec.kind, center = center, metadata = metadata)


# ---------------------------
# Utilities on existing colormaps

def sub_map(cmap, a, b, count = None):
	"""
	Returns the part of the colormap between fractions "a" and "b",
	resampled to "count" samples (default: the colormap's own count) by
	piecewise linear interpolation in sRGB.

	Raises DomainError
	"""
	if not (np.isfinite(a) and np.isfinite(b) and 0.0 <= a < b <= 1.0):
		raise DomainError(f'Sub-map bounds must satisfy 0 <= a < b <= 1, got {a}, {b}', (a, b))
	count = len(cmap) if count is None else int(count)
	if count < 2:
		raise DomainError(f'Sample count must be at least 2, got {count}', count)
	grid = np.linspace(0.0, 1.0, len(cmap))
	positions = np.linspace(a, b, count)
	samples = np.stack([ np.interp(positions, grid, cmap.samples[:, channel]) \
		for channel in range(3) ], axis = -1)
	kind, center = cmap.kind, None
	if cmap.kind == DIVERGING:
		center = (cmap.center - a) / (b - a)
		if not 0.0 < center < 1.0:
			kind, center = SEQUENTIAL, None
	return Colormap(cmap.name, samples, kind = kind, center = center, metadata = cmap.metadata)

def qualitative_from(cmap, count):
	"""
	Returns a qualitative colormap of "count" colors picked at evenly spaced
	positions i / (count - 1), each taken from the nearest sample.

	Raises DomainError
	"""
	if isinstance(count, bool) or int(count) != count or not 2 <= count <= len(cmap):
		raise DomainError(f'Qualitative count must be in [2, {len(cmap)}], got {count}', count)
	count = int(count)
	indices = np.floor(np.arange(count) * (len(cmap) - 1) / (count - 1) + 0.5).astype(int)
	return Colormap(cmap.name, cmap.samples[indices], kind = QUALITATIVE, metadata = cmap.metadata)


#  end cmaudit/generator.py
