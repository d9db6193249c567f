#  tests/__init__.py
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
import logging
import pytest
from pathlib import Path
import numpy as np
from cmaudit import Colormap
from cmaudit.io import registry_get
from cmaudit.generator import PathSpec, generate


TEST_DIR_PATH = Path(__file__).parent

RANDOM_SEED = 20260419

def colormap_path(filename):
	return Path(TEST_DIR_PATH, 'colormaps', filename)

def spec_path(filename):
	return Path(TEST_DIR_PATH, 'specs', filename)

def spec(filename):
	return PathSpec.from_json(spec_path(filename))

@pytest.fixture
def jet():
	return registry_get('jet')

@pytest.fixture
def gray():
	return registry_get('gray')

@pytest.fixture
def rainforest():
	pytest.importorskip('cmasher')
	return registry_get('rainforest')

@pytest.fixture(scope = 'session')
def uniform_gray():
	return generate(spec('gray_ramp.json'))

@pytest.fixture(scope = 'session')
def blue_ramp():
	return generate(spec('blue_ramp.json'))

@pytest.fixture(scope = 'session')
def cool_warm():
	return generate(spec('diverging.json'))

def constant_map(samples = 8, color = (0.3, 0.5, 0.7)):
	return Colormap('constant', [color] * samples)

def gray_ramp(samples = 256, name = 'ramp'):
	ramp = np.linspace(0.0, 1.0, samples)
	return Colormap(name, np.stack([ramp, ramp, ramp], axis = -1))

def random_specs(count = 5, seed = RANDOM_SEED, samples = 128):
	"""
	Returns "count" low-chroma sequential specs which fit sRGB everywhere. Their
	lightness span dominates the path, so the generated maps pass the default
	audit.
	"""
	rng = np.random.default_rng(seed)
	specs = []
	for index in range(count):
		lightness = [rng.uniform(20.0, 35.0), rng.uniform(65.0, 80.0)]
		if rng.uniform() < 0.5:
			lightness.reverse()
		specs.append(PathSpec(
			name = f'random_{index}',
			lightness = lightness,
			control_points = rng.uniform(-2.0, 2.0, size = (3, 2)).tolist(),
			samples = samples
		))
	return specs

def logging_dump(report):
	for name, verdict in report.verdicts.items():
		logging.debug('%s: %s = %s', report.colormap.name, name, verdict)


#  end tests/__init__.py
