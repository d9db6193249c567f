#  tests/test_20_cvd.py
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
from cmaudit.cvd import *
from cmaudit.metrics import lightness_profile
from . import *


def test_matrices():
	for kind in CVD_KINDS:
		assert np.array_equal(cvd_matrix(CvdSpec(kind, 0)), np.eye(3))
	assert cvd_matrix(CvdSpec(PROTAN))[0][0] == pytest.approx(0.152286)
	assert np.array_equal(cvd_matrix(CvdSpec(DEUTAN, 50)), np.array(MACHADO_MATRICES[DEUTAN][4]))
	halfway = cvd_matrix(CvdSpec(DEUTAN, 45))
	expected = (np.array(MACHADO_MATRICES[DEUTAN][3]) + np.array(MACHADO_MATRICES[DEUTAN][4])) / 2
	assert np.allclose(halfway, expected)

def test_spec():
	assert CvdSpec(DEUTAN, 50).label == 'deutan50'
	assert CvdSpec(PROTAN).label == 'protan100'
	assert CvdSpec.parse('Protan:12.5') == CvdSpec(PROTAN, 12.5)
	assert CvdSpec.parse('tritan') == CvdSpec(TRITAN, 100.0)
	for string in ('protan:150', 'achromat', 'deutan:x'):
		with pytest.raises(DomainError):
			CvdSpec.parse(string)

def test_identity(jet):
	simulated = simulate_cvd(jet, CvdSpec(PROTAN, 0))
	assert np.allclose(simulated.samples, jet.samples, atol = 1e-12)
	assert simulated.name == 'jet_protan0'
	assert simulated.metadata['cvd_clipping'] == 0.0

def test_grays_are_fixed():
	ramp = gray_ramp(64)
	for kind in CVD_KINDS:
		simulated = simulate_cvd(ramp, CvdSpec(kind))
		assert np.max(np.abs(simulated.samples - ramp.samples)) < 1e-6

def test_reversal_commutes(jet):
	spec = CvdSpec(DEUTAN, 70)
	assert np.allclose(simulate_cvd(jet.reversed(), spec).samples,
		simulate_cvd(jet, spec).samples[::-1])

def test_clipping_recorded():
	saturated = Colormap('saturated', [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
	simulated = simulate_cvd(saturated, CvdSpec(PROTAN))
	assert simulated.metadata['cvd_clipping'] > 0.0
	assert np.all((simulated.samples >= 0.0) & (simulated.samples <= 1.0))

def test_grayscale(jet):
	grayscale = to_grayscale(jet)
	assert grayscale.name == 'jet_grayscale'
	assert np.array_equal(grayscale.samples[:, 0], grayscale.samples[:, 1])
	assert np.array_equal(grayscale.samples[:, 0], grayscale.samples[:, 2])
	assert np.max(np.abs(lightness_profile(grayscale) - lightness_profile(jet))) < 1e-3
	again = to_grayscale(grayscale)
	assert np.max(np.abs(again.samples - grayscale.samples)) < 2e-3
	# jet is brightest in the middle
	peak = int(np.argmax(lightness_profile(grayscale)))
	assert 0 < peak < len(jet) - 1

@pytest.mark.parametrize('fixture',
	['jet', 'gray', 'rainforest', 'uniform_gray', 'blue_ramp', 'cool_warm'])
def test_grayscale_keeps_lightness(fixture, request):
	cmap = request.getfixturevalue(fixture)
	grayscale = to_grayscale(cmap)
	assert np.max(np.abs(lightness_profile(grayscale) - lightness_profile(cmap))) < 1e-3


#  end tests/test_20_cvd.py
