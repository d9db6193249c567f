#  cmaudit/colorspace.py
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
Conversions sRGB <-> linear RGB <-> XYZ <-> CIECAM02 <-> CAM02-UCS, and the
CAM02-UCS color difference.

Every function accepts array-likes whose last axis holds the three color
components and returns numpy arrays of the same shape.
"""
import logging
from math import pi
from typing import NamedTuple
from dataclasses import dataclass
from functools import cached_property
import numpy as np
from cmaudit import DomainError, ConfigurationError, GamutError


# ---------------------------
# Types

class SrgbColor(NamedTuple):
	"""
	Display-referred sRGB, components in [0, 1].
	"""
	r: float
	g: float
	b: float


class XyzColor(NamedTuple):
	"""
	CIE 1931 tristimulus values, Y of the adopted white = 100.
	"""
	X: float
	Y: float
	Z: float


class JabColor(NamedTuple):
	"""
	CAM02-UCS lightness J' and opponent coordinates a', b'.
	"""
	Jp: float
	ap: float
	bp: float


# ---------------------------
# Constants

ENCODE = 'encode'
DECODE = 'decode'
FORWARD = 'forward'
INVERSE = 'inverse'

AVERAGE = 'average'
DIM = 'dim'
DARK = 'dark'

# Surround: (F, c, N_c)
SURROUNDS = {
	AVERAGE		: (1.0, 0.69, 1.0),
	DIM			: (0.9, 0.59, 0.9),
	DARK		: (0.8, 0.525, 0.8)
}

# IEC 61966-2-1 primaries, scaled so that the Y row sums to one
_SRGB_TO_XYZ_PUBLISHED = np.array([
	[0.4124564, 0.3575761, 0.1804375],
	[0.2126729, 0.7151522, 0.0721750],
	[0.0193339, 0.1191920, 0.9503041]
])
SRGB_TO_XYZ = _SRGB_TO_XYZ_PUBLISHED / _SRGB_TO_XYZ_PUBLISHED[1].sum()
XYZ_TO_SRGB = np.linalg.inv(SRGB_TO_XYZ)

M_CAT02 = np.array([
	[ 0.7328, 0.4296, -0.1624],
	[-0.7036, 1.6975,  0.0061],
	[ 0.0030, 0.0136,  0.9834]
])
M_CAT02_INV = np.linalg.inv(M_CAT02)

M_HPE = np.array([
	[ 0.38971, 0.68898, -0.07868],
	[-0.22981, 1.18340,  0.04641],
	[ 0.00000, 0.00000,  1.00000]
])

# Row unit sums keep the equal-energy stimulus exactly neutral
M_HPE_NEUTRAL = M_HPE / M_HPE.sum(axis = 1, keepdims = True)

# Inverse opponent-dimension matrix applied to (p2, a, b)
_OPPONENT_INV = np.array([
	[460.0,  451.0,   288.0],
	[460.0, -891.0,  -261.0],
	[460.0, -220.0, -6300.0]
]) / 1403.0

# CAM02-UCS coefficients
UCS_KL = 1.0
UCS_C1 = 0.007
UCS_C2 = 0.0228

# Tiny negative XYZ components within this distance of zero are rounding noise
NEGATIVE_XYZ_TOLERANCE = 1e-9

# Components within this distance outside [0, 1] still count as in gamut
GAMUT_TOLERANCE = 1e-7

# The adopted white: sRGB (1, 1, 1) under the matrix above, i.e. D65 with Y = 100
D65 = XyzColor(*(100.0 * SRGB_TO_XYZ.sum(axis = 1)))


# ---------------------------
# Support functions

def _apply(matrix, values):
	"""
	Applies a 3x3 matrix to every color on the last axis of "values".

	Written out per component so every row is computed with identical
	arithmetic regardless of array length, order, or thread.
	"""
	x, y, z = values[..., 0], values[..., 1], values[..., 2]
	return np.stack([
		matrix[0, 0] * x + matrix[0, 1] * y + matrix[0, 2] * z,
		matrix[1, 0] * x + matrix[1, 1] * y + matrix[1, 2] * z,
		matrix[2, 0] * x + matrix[2, 1] * y + matrix[2, 2] * z
	], axis = -1)

def _as_colors(values, what):
	"""
	Converts to a float array with a last axis of length 3, checking finiteness.

	Raises DomainError
	"""
	arr = np.asarray(values, dtype = float)
	if arr.shape[-1:] != (3,):
		raise DomainError(f'{what} must have 3 components, got shape {arr.shape}', values)
	if not np.all(np.isfinite(arr)):
		raise DomainError(f'{what} contains non-finite values', values)
	return arr

def _adapt(values, F_L):
	tmp = (F_L * np.abs(values) / 100.0) ** 0.42
	return np.sign(values) * 400.0 * tmp / (tmp + 27.13) + 0.1

def _unadapt(values, F_L):
	"""
	Returns (unadapted values, mask of valid entries).
	"""
	x = values - 0.1
	ax = np.abs(x)
	valid = ax < 400.0
	ax = np.where(valid, ax, 0.0)
	return np.sign(x) * (100.0 / F_L) * (27.13 * ax / (400.0 - ax)) ** (1.0 / 0.42), valid


# ---------------------------
# Viewing conditions

class _Model(NamedTuple):
	F: float
	c: float
	N_c: float
	D_RGB: np.ndarray
	F_L: float
	n: float
	z: float
	N_bb: float
	N_cb: float
	A_w: float
	to_hpe: np.ndarray
	from_hpe: np.ndarray


@dataclass(frozen = True)
class ViewingConditions:
	"""
	CIECAM02 viewing environment fixing the sRGB -> CAM02-UCS mapping.

	"discount_illuminant" sets the degree of adaptation D to 1 and keeps the
	adopted white (and every gray) exactly on the achromatic axis. With it off,
	D is computed from the surround and adapting luminance.

	Raises ConfigurationError
	"""

	white_point: XyzColor = D65
	adapting_luminance: float = (64.0 / pi) / 5.0
	background_luminance: float = 20.0
	surround: str = AVERAGE
	discount_illuminant: bool = True

	def __post_init__(self):
		if len(self.white_point) != 3 or not all(np.isfinite(self.white_point)):
			raise ConfigurationError(f'Invalid white point {self.white_point}')
		if abs(self.white_point[1] - 100.0) > 1e-9:
			raise ConfigurationError(f'White point Y must be 100, got {self.white_point[1]}')
		if not np.isfinite(self.adapting_luminance) or self.adapting_luminance <= 0:
			raise ConfigurationError(
				f'Adapting luminance must be > 0, got {self.adapting_luminance}')
		if not 0 < self.background_luminance <= 100:
			raise ConfigurationError(
				f'Background luminance factor must be in (0, 100], got {self.background_luminance}')
		if self.surround not in SURROUNDS:
			raise ConfigurationError(
				f'Surround must be one of {", ".join(SURROUNDS)}, got "{self.surround}"')

	@cached_property
	def model(self):
		"""
		Returns the derived CIECAM02 parameters for these conditions.
		"""
		F, c, N_c = SURROUNDS[self.surround]
		XYZ_w = np.array(self.white_point, dtype = float)
		Y_w = XYZ_w[1]
		L_A = self.adapting_luminance
		RGB_w = _apply(M_CAT02, XYZ_w)
		if self.discount_illuminant:
			D = 1.0
			hpe = M_HPE_NEUTRAL
		else:
			D = float(np.clip(F * (1.0 - (1.0 / 3.6) * np.exp((-L_A - 42.0) / 92.0)), 0.0, 1.0))
			hpe = M_HPE
		D_RGB = D * Y_w / RGB_w + 1.0 - D
		k = 1.0 / (5.0 * L_A + 1.0)
		F_L = 0.2 * k ** 4 * (5.0 * L_A) + 0.1 * (1.0 - k ** 4) ** 2 * (5.0 * L_A) ** (1.0 / 3.0)
		n = self.background_luminance / Y_w
		z = 1.48 + np.sqrt(n)
		N_bb = 0.725 * (1.0 / n) ** 0.2
		to_hpe = hpe @ M_CAT02_INV
		from_hpe = M_CAT02 @ np.linalg.inv(hpe)
		RGB_aw = _adapt(_apply(to_hpe, D_RGB * RGB_w), F_L)
		A_w = (2.0 * RGB_aw[0] + RGB_aw[1] + RGB_aw[2] / 20.0 - 0.305) * N_bb
		logging.debug('CIECAM02 model: D=%.6f F_L=%.6f n=%.4f z=%.4f A_w=%.6f', D, F_L, n, z, A_w)
		return _Model(F, c, N_c, D_RGB, F_L, n, z, N_bb, N_bb, A_w, to_hpe, from_hpe)

	def summary(self):
		"""
		Returns a dict describing these conditions, in a stable key order.
		"""
		return {
			'whitePoint'				: [float(v) for v in self.white_point],
			'adaptingLuminance'			: float(self.adapting_luminance),
			'backgroundLuminanceFactor'	: float(self.background_luminance),
			'surround'					: self.surround,
			'discountIlluminant'		: bool(self.discount_illuminant)
		}


DEFAULT_CONDITIONS = ViewingConditions()


# ---------------------------
# Operations

def srgb_transfer(value, direction = DECODE):
	"""
	IEC 61966-2-1 transfer function.

	"decode" maps encoded sRGB components to linear light, "encode" is its exact
	inverse.

	Raises DomainError
	"""
	arr = np.asarray(value, dtype = float)
	if not np.all(np.isfinite(arr)):
		raise DomainError('sRGB component is not finite', value)
	if direction == DECODE:
		if np.any((arr < 0.0) | (arr > 1.0)):
			raise DomainError('sRGB component to decode is outside [0, 1]', value)
		return np.where(arr <= 0.04045, arr / 12.92, ((arr + 0.055) / 1.055) ** 2.4)
	if direction == ENCODE:
		return np.where(arr <= 0.0031308, arr * 12.92,
			1.055 * np.abs(arr) ** (1.0 / 2.4) - 0.055)
	raise DomainError(f'Invalid transfer direction "{direction}"', direction)

def rgb_xyz(color, direction = FORWARD):
	"""
	Linear sRGB -> XYZ (white at Y = 100) when "forward", XYZ -> linear sRGB
	when "inverse".

	Raises DomainError
	"""
	arr = _as_colors(color, 'Color')
	if direction == FORWARD:
		return 100.0 * _apply(SRGB_TO_XYZ, arr)
	if direction == INVERSE:
		return _apply(XYZ_TO_SRGB, arr / 100.0)
	raise DomainError(f'Invalid matrix direction "{direction}"', direction)

def xyz_to_jab(xyz, vc = None):
	"""
	Full CIECAM02 forward model followed by the CAM02-UCS mapping.

	Raises DomainError
	"""
	m = (vc or DEFAULT_CONDITIONS).model
	xyz = _as_colors(xyz, 'XYZ')
	if np.any(xyz < -NEGATIVE_XYZ_TOLERANCE):
		raise DomainError('XYZ has negative components', xyz)
	xyz = np.maximum(xyz, 0.0)
	RGB_a = _adapt(_apply(m.to_hpe, m.D_RGB * _apply(M_CAT02, xyz)), m.F_L)
	R, G, B = RGB_a[..., 0], RGB_a[..., 1], RGB_a[..., 2]
	a = R - 12.0 * G / 11.0 + B / 11.0
	b = (R + G - 2.0 * B) / 9.0
	h = np.arctan2(b, a)
	e_t = 0.25 * (np.cos(h + 2.0) + 3.8)
	A = np.maximum((2.0 * R + G + B / 20.0 - 0.305) * m.N_bb, 0.0)
	J = 100.0 * (A / m.A_w) ** (m.c * m.z)
	t = (50000.0 / 13.0 * m.N_c * m.N_cb * e_t * np.hypot(a, b)) / (R + G + 21.0 / 20.0 * B)
	C = t ** 0.9 * np.sqrt(J / 100.0) * (1.64 - 0.29 ** m.n) ** 0.73
	M = C * m.F_L ** 0.25
	Jp = (1.0 + 100.0 * UCS_C1) * J / (1.0 + UCS_C1 * J)
	Mp = np.log1p(UCS_C2 * M) / UCS_C2
	return np.stack([Jp, Mp * np.cos(h), Mp * np.sin(h)], axis = -1)

def _jab_to_xyz(jab, m):
	"""
	Inverse model without raising. Returns (xyz, mask of invertible entries).
	"""
	Jp, ap, bp = jab[..., 0], jab[..., 1], jab[..., 2]
	denom_J = 1.0 + 100.0 * UCS_C1 - UCS_C1 * Jp
	valid = (Jp >= 0.0) & (denom_J > 0.0)
	J = np.where(valid, Jp / np.where(valid, denom_J, 1.0), 0.0)
	M = np.expm1(UCS_C2 * np.hypot(ap, bp)) / UCS_C2
	h = np.arctan2(bp, ap)
	C = M / m.F_L ** 0.25
	valid &= (J > 0.0) | (C == 0.0)
	scale = np.sqrt(J / 100.0) * (1.64 - 0.29 ** m.n) ** 0.73
	t = np.where(J > 0.0, (C / np.where(J > 0.0, scale, 1.0)) ** (1.0 / 0.9), 0.0)
	e_t = 0.25 * (np.cos(h + 2.0) + 3.8)
	A = m.A_w * (J / 100.0) ** (1.0 / (m.c * m.z))
	p2 = A / m.N_bb + 0.305
	cos_h, sin_h = np.cos(h), np.sin(h)
	denom = 23.0 * 50000.0 / 13.0 * m.N_c * m.N_cb * e_t + 11.0 * t * cos_h + 108.0 * t * sin_h
	valid &= denom > 0.0
	gamma = 23.0 * p2 * t / np.where(valid, denom, 1.0)
	RGB_a = _apply(_OPPONENT_INV, np.stack([p2, gamma * cos_h, gamma * sin_h], axis = -1))
	RGB_p, ok = _unadapt(RGB_a, m.F_L)
	valid &= np.all(ok, axis = -1)
	xyz = _apply(M_CAT02_INV, _apply(m.from_hpe, RGB_p) / m.D_RGB)
	valid &= np.all(np.isfinite(xyz), axis = -1)
	return xyz, valid

def jab_to_xyz(jab, vc = None):
	"""
	Exact inverse of xyz_to_jab.

	Raises GamutError carrying the first J'a'b' outside the invertible region.
	"""
	jab = _as_colors(jab, 'J\'a\'b\'')
	xyz, valid = _jab_to_xyz(jab, (vc or DEFAULT_CONDITIONS).model)
	if not np.all(valid):
		bad = jab.reshape(-1, 3)[np.flatnonzero(~valid.reshape(-1))[0]]
		raise GamutError(bad, 'J\'a\'b\' ({:.4f}, {:.4f}, {:.4f}) is outside the '
			'invertible region of the color appearance model'.format(*bad))
	return xyz

def delta_e(a, b):
	"""
	CAM02-UCS color difference: Euclidean distance with K_L = 1.
	"""
	a = np.asarray(a, dtype = float)
	b = np.asarray(b, dtype = float)
	d0 = (a[..., 0] - b[..., 0]) / UCS_KL
	d1 = a[..., 1] - b[..., 1]
	d2 = a[..., 2] - b[..., 2]
	return np.sqrt(d0 * d0 + d1 * d1 + d2 * d2)


# ---------------------------
# Composites

def srgb_to_jab(srgb, vc = None):
	"""
	Encoded sRGB -> CAM02-UCS.

	Raises DomainError
	"""
	return xyz_to_jab(rgb_xyz(srgb_transfer(_as_colors(srgb, 'sRGB'), DECODE)), vc)

def gamut_excess(jab, vc = None):
	"""
	Returns (unclipped sRGB, excess) where "excess" is, per color, how far the
	furthest component lies outside [0, 1]; infinite where the model cannot
	invert the color at all.
	"""
	jab = _as_colors(jab, 'J\'a\'b\'')
	xyz, valid = _jab_to_xyz(jab, (vc or DEFAULT_CONDITIONS).model)
	linear = _apply(XYZ_TO_SRGB, np.where(valid[..., None], xyz, 0.0) / 100.0)
	srgb = np.where(linear <= 0.0031308, linear * 12.92,
		1.055 * np.abs(linear) ** (1.0 / 2.4) - 0.055)
	excess = np.max(np.maximum(-srgb, srgb - 1.0), axis = -1).clip(min = 0.0)
	return srgb, np.where(valid, excess, np.inf)

def in_gamut(jab, vc = None, tolerance = GAMUT_TOLERANCE):
	"""
	Returns a boolean mask of the colors realizable in sRGB.
	"""
	return gamut_excess(jab, vc)[1] <= tolerance

def jab_to_srgb(jab, vc = None, clip = False, tolerance = GAMUT_TOLERANCE):
	"""
	CAM02-UCS -> encoded sRGB. Results are clipped to [0, 1]; unless "clip" is
	True, any color further than "tolerance" outside raises.

	Raises GamutError carrying the worst offender
	"""
	srgb, excess = gamut_excess(jab, vc)
	if not clip and np.any(excess > tolerance):
		worst = np.argmax(excess.reshape(-1))
		raise GamutError(np.asarray(jab, dtype = float).reshape(-1, 3)[worst])
	return np.clip(np.nan_to_num(srgb, nan = 0.0), 0.0, 1.0)


#  end cmaudit/colorspace.py
