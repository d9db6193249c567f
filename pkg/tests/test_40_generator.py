#  tests/test_40_generator.py
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
from cmaudit.colorspace import JabColor, GAMUT_TOLERANCE, gamut_excess, in_gamut, srgb_to_jab
from cmaudit.generator import *
from cmaudit.metrics import (
	INCREASING, DECREASING, audit, uniformity_rms, monotonicity, perceptual_range,
	lightness_profile, lightness_monotone
)
from . import *


def test_evaluate_path():
	blue = spec('blue_ramp.json')
	assert evaluate_path(blue, 0.0) == pytest.approx(JabColor(30.0, -3.0, -12.0))
	assert evaluate_path(blue, 1.0) == pytest.approx(JabColor(85.0, 4.0, 4.0))
	assert evaluate_path(blue, 0.5) == pytest.approx(JabColor(57.5, 0.0, -6.0))
	assert isinstance(evaluate_path(blue, 0.25), JabColor)
	points = evaluate_path(blue, np.linspace(0.0, 1.0, 11))
	assert points.shape == (11, 3)
	assert np.allclose(np.diff(points[:, 0]), 5.5)
	for t in (-0.01, 1.01, float('nan')):
		with pytest.raises(DomainError):
			evaluate_path(blue, t)
	with pytest.raises(PathSpecError):
		evaluate_path(spec('diverging.json'), 0.5)

def test_evaluate_path_is_continuous():
	blue = spec('blue_ramp.json')
	# includes the join between the two segments
	t = np.append(np.linspace(0.0, 1.0 - 1e-6, 101), 0.5 - 1e-6)
	steps = np.linalg.norm(evaluate_path(blue, t + 1e-6) - evaluate_path(blue, t), axis = -1)
	assert np.max(steps) < 1e-3

def test_reparameterize():
	# points bunched toward the start of a straight line
	t = np.linspace(0.0, 1.0, 1001)
	jab = np.stack([100.0 * t * t, np.zeros_like(t), np.zeros_like(t)], axis = -1)
	path = DensePath.from_points(jab, t)
	assert path.length == pytest.approx(100.0)
	even = reparameterize(path, 11)
	assert np.allclose(even[:, 0], np.linspace(0.0, 100.0, 11))
	assert np.allclose(reparameterize(path, 2), [[0.0, 0.0, 0.0], [100.0, 0.0, 0.0]])
	with pytest.raises(DomainError):
		reparameterize(path, 1)
	flat = DensePath.from_points(np.zeros((10, 3)))
	with pytest.raises(DegenerateColormapError):
		reparameterize(flat, 10)

def test_reparameterize_idempotent():
	# a helix has equal chords for equal arc lengths
	s = np.linspace(0.0, 1.0, 4001) ** 2
	helix = np.stack([30.0 + 40.0 * s, 20.0 * np.cos(np.pi * s), 20.0 * np.sin(np.pi * s)], axis = -1)
	once = reparameterize(DensePath.from_points(helix), 33)
	twice = reparameterize(DensePath.from_points(once), 33)
	first = np.linalg.norm(np.diff(once, axis = 0), axis = -1)
	second = np.linalg.norm(np.diff(twice, axis = 0), axis = -1)
	assert np.allclose(second, first, rtol = 1e-6, atol = 0.0)

def test_uniform_gray(uniform_gray):
	assert len(uniform_gray) == 256
	assert np.allclose(uniform_gray.samples[0], [0.0, 0.0, 0.0], atol = 1e-6)
	assert np.allclose(uniform_gray.samples[-1], [1.0, 1.0, 1.0], atol = 1e-6)
	assert uniformity_rms(uniform_gray) < 0.01
	assert monotonicity(uniform_gray) == INCREASING
	assert audit(uniform_gray).passed

def test_blue_ramp(blue_ramp):
	assert len(blue_ramp) == 256
	assert blue_ramp.metadata == {}
	assert uniformity_rms(blue_ramp) < 0.01
	assert monotonicity(blue_ramp) == INCREASING
	lightness = lightness_profile(blue_ramp)
	assert lightness[0] == pytest.approx(30.0, abs = 1e-4)
	assert lightness[-1] == pytest.approx(85.0, abs = 1e-4)
	assert audit(blue_ramp).passed

@pytest.mark.parametrize('path_spec', random_specs(), ids = lambda path_spec: path_spec.name)
def test_random_specs(path_spec):
	cmap = generate(path_spec)
	assert len(cmap) == path_spec.samples
	assert uniformity_rms(cmap) < 0.01
	expected = INCREASING if path_spec.lightness[1] > path_spec.lightness[0] else DECREASING
	assert monotonicity(cmap) == expected
	assert audit(cmap).passed

def test_out_of_gamut():
	too_bright = spec('out_of_gamut.json')
	with pytest.raises(GamutError) as info:
		generate(too_bright)
	assert info.value.t is not None
	assert 0.0 <= info.value.t <= 1.0
	assert 'at t=' in str(info.value)

def test_clip_chroma():
	clipped_spec = PathSpec.from_dict({
		'name'			: 'too_bright',
		'lightness'		: [95, 99],
		'controlPoints'	: [[80, 0], [0, 80]],
		'samples'		: 64,
		'gamutMode'		: 'clip'
	})
	assert clipped_spec.gamut_mode == CLIP_CHROMA
	t, jab, reduction = generate_jab(clipped_spec)
	assert 0.0 < reduction <= 1.0
	assert np.allclose(jab[:, 0], np.linspace(95.0, 99.0, 64))
	cmap = generate(clipped_spec)
	assert cmap.metadata['maxChromaReduction'] == pytest.approx(reduction, rel = 1e-6)
	assert np.max(np.abs(lightness_profile(cmap) - jab[:, 0])) < 1e-4

def test_clip_chroma_keeps_lightness():
	jab = np.array([[50.0, 0.0, 0.0], [50.0, 60.0, 0.0]])
	fitted, scale = clip_chroma(jab)
	assert scale[0] == 1.0
	assert 0.0 < scale[1] < 1.0
	assert np.array_equal(fitted[:, 0], jab[:, 0])
	assert fitted[1, 1] == pytest.approx(60.0 * scale[1])
	assert in_gamut(fitted[1])
	# the bisection stops within CHROMA_TOLERANCE of the sRGB boundary
	beyond = [50.0, fitted[1, 1] + 2.0 * CHROMA_TOLERANCE, 0.0]
	assert gamut_excess(beyond)[1] > GAMUT_TOLERANCE

def test_diverging(cool_warm):
	path_spec = spec('diverging.json')
	first, second = path_spec.halves()
	assert first.samples + second.samples == path_spec.samples + 1
	assert second.control_points == path_spec.second_control_points
	assert len(cool_warm) == 255
	assert cool_warm.kind == DIVERGING
	assert cool_warm.center_index == 127
	lightness = lightness_profile(cool_warm)
	assert int(np.argmax(lightness)) == 127
	assert lightness[127] == pytest.approx(90.0, abs = 1e-4)
	assert lightness_monotone(lightness, DIVERGING, cool_warm.center_index)
	assert uniformity_rms(cool_warm) < 0.01

def test_invalid_specs():
	with pytest.raises(PathSpecError):
		spec('cyclic.json')
	with pytest.raises(PathSpecError) as info:
		spec('malformed.json')
	assert 'line' in str(info.value)
	good = {
		'name'			: 'ok',
		'lightness'		: [20, 80],
		'controlPoints'	: [[0, 0], [1, 1]]
	}
	assert PathSpec.from_dict(good).samples == DEFAULT_SAMPLES
	for change in (
		{ 'lightness': [20] },
		{ 'lightness': [20, 120] },
		{ 'lightness': [50, 50] },
		{ 'controlPoints': [[0, 0]] },
		{ 'controlPoints': [[0, 0], [1]] },
		{ 'samples': 1 },
		{ 'samples': 2.5 },
		{ 'gamutMode': 'loose' },
		{ 'kind': 'qualitative' },
		{ 'kind': 'diverging' },
		{ 'kind': 'diverging', 'diverging': { 'center': 50, 'secondHalfControlPoints': [[0, 0], [2, 2]] } },
		{ 'kind': 'diverging', 'diverging': { 'center': 20, 'secondHalfControlPoints': [[1, 1], [2, 2]] } }
	):
		with pytest.raises(PathSpecError):
			PathSpec.from_dict(dict(good, **change))
	with pytest.raises(PathSpecError):
		PathSpec.from_dict({ 'name': 'missing' })
	with pytest.raises(PathSpecError):
		PathSpec.from_dict([1, 2, 3])

def test_sub_map(jet, gray):
	same = sub_map(jet, 0.0, 1.0)
	assert np.allclose(same.samples, jet.samples)
	half = sub_map(gray, 0.0, 0.5, 3)
	assert np.allclose(half.samples[:, 0], [0.0, 0.25, 0.5])
	assert perceptual_range(sub_map(jet, 0.2, 0.7)) <= perceptual_range(jet)
	for a, b in ((0.5, 0.5), (-0.1, 0.5), (0.2, 1.5), (0.7, 0.2)):
		with pytest.raises(DomainError):
			sub_map(jet, a, b)

def test_sub_map_diverging(cool_warm):
	inner = sub_map(cool_warm, 0.25, 1.0)
	assert inner.kind == DIVERGING
	assert inner.center == pytest.approx(1.0 / 3.0)
	outer = sub_map(cool_warm, 0.0, 0.4)
	assert outer.kind == SEQUENTIAL
	assert outer.center is None

def test_qualitative(jet):
	palette = qualitative_from(jet, 5)
	assert palette.kind == QUALITATIVE
	assert len(palette) == 5
	assert np.array_equal(palette.samples[0], jet.samples[0])
	assert np.array_equal(palette.samples[-1], jet.samples[-1])
	# 2 * 255 / 4 = 127.5 picks sample 128
	assert np.array_equal(palette.samples[2], jet.samples[128])
	assert np.array_equal(qualitative_from(jet, len(jet)).samples, jet.samples)
	for count in (1, 257, 2.5):
		with pytest.raises(DomainError):
			qualitative_from(jet, count)

def test_qualitative_spacing(uniform_gray, blue_ramp):
	for cmap in (uniform_gray, blue_ramp):
		picks = qualitative_from(cmap, 5)
		deltas = np.linalg.norm(np.diff(srgb_to_jab(picks.samples), axis = 0), axis = -1)
		assert np.max(np.abs(deltas / np.mean(deltas) - 1.0)) < 0.02


#  end tests/test_40_generator.py
