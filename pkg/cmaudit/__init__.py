#  cmaudit/__init__.py
#
#  Copyright 2024-2026 Leon Dionne <ldionne@dridesign.sh.cn>
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
Audits colormaps for perceptual uniformity, grayscale safety and color-vision
deficiency friendliness, and generates perceptually uniform colormaps in the
CAM02-UCS color space.
"""
import numpy as np


# ---------------------------
# "Magic" members:

__all__ = [	'LOG_FORMAT',
			'SEQUENTIAL', 'DIVERGING', 'CYCLIC', 'QUALITATIVE', 'KINDS',
			'Colormap',
			'CmauditError', 'DomainError', 'ConfigurationError', 'GamutError',
			'DegenerateColormapError', 'InvalidColormapError',
			'ColormapNotFoundError', 'ColormapFileError', 'PathSpecError',
			'sig9']

__version__ = "1.0.0"


# ---------------------------
# Constants:

LOG_FORMAT = '[%(filename)24s:%(lineno)3d] %(message)s'

# Colormap kinds
SEQUENTIAL		= 'sequential'
DIVERGING		= 'diverging'
CYCLIC			= 'cyclic'
QUALITATIVE		= 'qualitative'

KINDS = (SEQUENTIAL, DIVERGING, CYCLIC, QUALITATIVE)


# ---------------------------
# Functions

def sig9(value):
	"""
	Returns the given float rounded to 9 significant digits. All serialized
	artifacts pass their floats through this, so output is byte-stable.
	"""
	return float(f'{float(value):.9g}')


# ---------------------------
# Colormap

class Colormap:
	"""
	A named, ordered list of sRGB samples plus a kind tag.

	Samples are held in a read-only (N, 3) float64 numpy array with every
	component in [0, 1].
	"""

	def __init__(self, name, samples, *, kind = SEQUENTIAL, center = None, metadata = None):
		"""
		"samples" may be any array-like of shape (N, 3), N >= 2.

		"center" is the fraction of the map where a diverging map turns around.
		It defaults to 0.5 for diverging maps and is ignored for other kinds.

		Raises InvalidColormapError
		"""
		if not name:
			raise InvalidColormapError('Colormap name may not be empty')
		if kind not in KINDS:
			raise InvalidColormapError(f'Invalid colormap kind "{kind}"', name)
		samples = np.array(samples, dtype = float)
		if samples.ndim != 2 or samples.shape[1] != 3:
			raise InvalidColormapError(
				f'Samples must be a list of RGB triples, got shape {samples.shape}', name)
		if len(samples) < 2:
			raise InvalidColormapError('A colormap needs at least 2 samples', name)
		if not np.all(np.isfinite(samples)):
			raise InvalidColormapError('Samples contain non-finite values', name)
		outside = np.flatnonzero(np.any((samples < 0.0) | (samples > 1.0), axis = 1))
		if len(outside):
			raise InvalidColormapError(
				f'Sample {outside[0]} {tuple(samples[outside[0]])} is outside [0, 1]', name)
		samples.setflags(write = False)
		self.name = name
		self.kind = kind
		self.samples = samples
		if kind == DIVERGING:
			self.center = 0.5 if center is None else float(center)
			if not 0.0 < self.center < 1.0:
				raise InvalidColormapError(f'Diverging center {center} is outside (0, 1)', name)
		else:
			self.center = None
		self.metadata = dict(metadata or {})

	def __len__(self):
		return len(self.samples)

	def __repr__(self):
		return f'<Colormap "{self.name}" {self.kind} N={len(self)}>'

	@property
	def center_index(self):
		"""
		Returns (int) index of the declared center sample of a diverging map,
		or None for other kinds.
		"""
		if self.center is None:
			return None
		return int(round(self.center * (len(self) - 1)))

	def derived(self, samples, *, name = None, kind = None, metadata = None):
		"""
		Returns a new Colormap sharing this one's kind and center, with the given
		samples and (optionally) a new name, kind or metadata.
		"""
		kind = kind or self.kind
		return Colormap(name or self.name, samples,
			kind = kind,
			center = self.center if kind == DIVERGING else None,
			metadata = self.metadata if metadata is None else metadata)

	def reversed(self):
		"""
		Returns a copy with the sample order reversed; a diverging center is
		mirrored.
		"""
		return Colormap(f'{self.name}_r', self.samples[::-1],
			kind = self.kind,
			center = None if self.center is None else 1.0 - self.center,
			metadata = self.metadata)

	def renamed(self, name):
		"""
		Returns a copy with the given name.
		"""
		return self.derived(self.samples, name = name)


# ---------------------------
# Error classes

class CmauditError(Exception):
	"""
	Base class of all errors raised by this package.
	"""


class DomainError(CmauditError, ValueError):
	"""
	Raised when a value is non-finite or outside the domain of an operation.
	"""

	def __init__(self, message, value = None):
		self.value = value
		super().__init__(message)


class ConfigurationError(CmauditError, ValueError):
	"""
	Raised when viewing conditions or audit options are invalid.
	"""


class GamutError(CmauditError):
	"""
	Raised when a CAM02-UCS color cannot be realized, either by the inverse
	color appearance model or as an sRGB color with components in [0, 1].
	"""

	def __init__(self, jab, message = None, t = None):
		self.jab = tuple(float(v) for v in jab)
		self.t = t
		where = '' if t is None else f' at t={t:.6f}'
		super().__init__(message or
			'J\'a\'b\' ({:.4f}, {:.4f}, {:.4f}){} is out of gamut'.format(*self.jab, where))


class DegenerateColormapError(CmauditError):
	"""
	Raised when a statistic cannot be computed because the colormap has zero
	perceptual range or too few samples.
	"""

	def __init__(self, name, message):
		self.name = name
		super().__init__(f'"{name}": {message}')


class InvalidColormapError(CmauditError, ValueError):
	"""
	Raised when colormap construction invariants are violated.
	"""

	def __init__(self, message, name = None):
		self.name = name
		super().__init__(message if name is None else f'"{name}": {message}')


class ColormapNotFoundError(CmauditError, KeyError):
	"""
	Raised when a registry lookup fails.
	"""

	def __init__(self, name, available):
		self.name = name
		self.available = sorted(available)
		super().__init__(
			f'Colormap "{name}" not found; available: {", ".join(self.available)}')

	def __str__(self):
		return self.args[0]


class ColormapFileError(CmauditError):
	"""
	Raised when a colormap file cannot be parsed. "lineno" is 1-based, or None
	when the error concerns the file as a whole.
	"""

	def __init__(self, filename, lineno, message):
		self.filename = filename
		self.lineno = lineno
		self.origin = message
		super().__init__(f'{filename}: {message}' if lineno is None \
			else f'{filename}, line {lineno}: {message}')


class PathSpecError(CmauditError, ValueError):
	"""
	Raised when a generator path specification is invalid.
	"""

	def __init__(self, message, name = None):
		self.name = name
		super().__init__(message if name is None else f'"{name}": {message}')


#  end cmaudit/__init__.py
