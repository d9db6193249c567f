#  tests/test_10_colorspace.py
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
import pytest
import numpy as np
from cmaudit import *
from cmaudit.colorspace import *
from . import *


def test_transfer():
	assert srgb_transfer(0.0) == pytest.approx(0.0)
	assert srgb_transfer(1.0) == pytest.approx(1.0)
	assert srgb_transfer(0.04045) == pytest.approx(0.04045 / 12.92)
	assert srgb_transfer(0.5) == pytest.approx(0.214041, abs = 1e-6)
	values = np.linspace(0.0, 1.0, 101)
	assert np.allclose(srgb_transfer(srgb_transfer(values), ENCODE), values, atol = 1e-12)

def test_transfer_domain():
	with pytest.raises(DomainError):
		srgb_transfer(1.5)
	with pytest.raises(DomainError):
		srgb_transfer(-0.1)
	with pytest.raises(DomainError):
		srgb_transfer(float('nan'))
	with pytest.raises(DomainError):
		srgb_transfer(0.5, 'sideways')

def test_white_xyz():
	xyz = rgb_xyz([1.0, 1.0, 1.0])
	assert xyz[1] == pytest.approx(100.0)
	assert tuple(xyz) == pytest.approx(tuple(D65))
	assert np.allclose(rgb_xyz(xyz, INVERSE), [1.0, 1.0, 1.0])

def test_white_and_black():
	white = srgb_to_jab([1.0, 1.0, 1.0])
	black = srgb_to_jab([0.0, 0.0, 0.0])
	assert white[0] == pytest.approx(100.0, abs = 1e-6)
	assert abs(white[1]) < 1e-6 and abs(white[2]) < 1e-6
	assert black[0] == pytest.approx(0.0, abs = 1e-9)
	assert delta_e(white, black) == pytest.approx(100.0, abs = 1e-6)

def test_grays_are_achromatic():
	levels = np.linspace(0.0, 1.0, 33)
	jab = srgb_to_jab(np.stack([levels, levels, levels], axis = -1))
	assert np.max(np.abs(jab[:, 1:])) < 1e-6
	assert np.all(np.diff(jab[:, 0]) > 0)

# (Y / Y_w, J') of grays under the default conditions, where J reduces to
# 100 * (q(Y) / q(Y_w)) ** (c * z) with q(Y) = x / (x + 27.13), x = (F_L * Y / Y_w) ** 0.42
GRAY_LIGHTNESS = [
	(0.0, 0.0),
	(0.05, 28.7018),
	(0.18, 52.0099),
	(0.5, 78.6163),
	(1.0, 100.0)
]

def test_gray_lightness_references():
	white = np.array(D65)
	for factor, lightness in GRAY_LIGHTNESS:
		jab = xyz_to_jab(factor * white)
		assert jab[0] == pytest.approx(lightness, abs = 5e-3)
		assert abs(jab[1]) < 1e-6 and abs(jab[2]) < 1e-6
	# sRGB mid-gray decodes to Y = 21.4041
	assert srgb_to_jab([0.5, 0.5, 0.5])[0] == pytest.approx(56.0284, abs = 5e-3)

def test_round_trip():
	rng = np.random.default_rng(RANDOM_SEED)
	srgb = rng.uniform(0.0, 1.0, size = (1000, 3))
	back = jab_to_srgb(srgb_to_jab(srgb), tolerance = 1e-6)
	assert np.max(np.abs(back - srgb)) < 1e-4

def test_jab_color_input():
	jab = srgb_to_jab(SrgbColor(0.2, 0.4, 0.6))
	assert jab.shape == (3,)
	xyz = jab_to_xyz(JabColor(*jab))
	assert np.allclose(xyz_to_jab(xyz), jab)

def test_domain_errors():
	with pytest.raises(DomainError):
		srgb_to_jab([0.2, 0.4])
	with pytest.raises(DomainError):
		xyz_to_jab([-1.0, 50.0, 50.0])
	with pytest.raises(DomainError):
		rgb_xyz([float('inf'), 0.0, 0.0])

def test_gamut():
	assert in_gamut(srgb_to_jab([0.3, 0.5, 0.7]))
	assert not in_gamut([50.0, 60.0, 0.0])
	with pytest.raises(GamutError) as info:
		jab_to_srgb([[50.0, 0.0, 0.0], [50.0, 60.0, 0.0]])
	assert info.value.jab == pytest.approx((50.0, 60.0, 0.0))
	clipped = jab_to_srgb([50.0, 60.0, 0.0], clip = True)
	assert np.all((clipped >= 0.0) & (clipped <= 1.0))

def test_inverse_outside_model():
	with pytest.raises(GamutError):
		jab_to_xyz([-5.0, 0.0, 0.0])

def test_viewing_conditions():
	assert DEFAULT_CONDITIONS.surround == AVERAGE
	assert DEFAULT_CONDITIONS.summary()['backgroundLuminanceFactor'] == 20.0
	dim = ViewingConditions(surround = DIM)
	assert srgb_to_jab([0.3, 0.5, 0.7], dim)[0] != pytest.approx(srgb_to_jab([0.3, 0.5, 0.7])[0])
	for kwargs in (
		{ 'white_point': XyzColor(95.0, 90.0, 108.0) },
		{ 'adapting_luminance': 0.0 },
		{ 'background_luminance': 0.0 },
		{ 'background_luminance': 120.0 },
		{ 'surround': 'bright' }
	):
		with pytest.raises(ConfigurationError):
			ViewingConditions(**kwargs)

def test_against_colorspacious():
	colorspacious = pytest.importorskip('colorspacious')
	white = XyzColor(95.047, 100.0, 108.883)
	space = colorspacious.CIECAM02Space(list(white), 20.0, 64.0 / np.pi / 5.0)
	vc = ViewingConditions(white_point = white, discount_illuminant = False)
	rng = np.random.default_rng(RANDOM_SEED)
	xyz = rgb_xyz(srgb_transfer(rng.uniform(0.02, 1.0, size = (50, 3))))
	expected = colorspacious.cspace_convert(xyz, { 'name': 'XYZ100' },
		{ 'name': 'CAM02-UCS', 'ciecam02_space': space })
	jab = xyz_to_jab(xyz, vc)
	assert np.max(np.abs(jab - expected)) < 1e-3
	assert np.allclose(jab_to_xyz(jab, vc), xyz, atol = 1e-6)


#  end tests/test_10_colorspace.py
