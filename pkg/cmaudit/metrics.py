#  cmaudit/metrics.py
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
Colormap statistics: lightness profile, perceptual derivative (adjacent-sample
delta E), perceptual range, derivative flatness, path smoothness and CVD
consistency, and the audit which turns them into verdicts.
"""
import logging, json
from math import fsum, sqrt
from typing import NamedTuple
from dataclasses import dataclass, field
from functools import partial
from concurrent.futures import ThreadPoolExecutor
import numpy as np
from cmaudit import (
	DIVERGING, Colormap, sig9,
	ConfigurationError, DegenerateColormapError, DomainError
)
from cmaudit.colorspace import DEFAULT_CONDITIONS, srgb_to_jab, delta_e
from cmaudit.cvd import DEUTAN, PROTAN, CvdSpec, simulate_cvd, to_grayscale


# ---------------------------
# Constants

INCREASING		= 'increasing'
DECREASING		= 'decreasing'
NON_MONOTONIC	= 'non-monotonic'

NORMAL			= 'normal'
GRAYSCALE		= 'grayscale'

# Default verdict thresholds
UNIFORMITY_THRESHOLD	= 0.05
SMOOTHNESS_THRESHOLD	= 0.4
CVD_THRESHOLD			= 0.25
ANOMALY_SEVERITY		= 50.0

# Path segments shorter than this carry no direction
MIN_SEGMENT = 1e-9


# ---------------------------
# Options

@dataclass(frozen = True)
class AuditOptions:
	"""
	Verdict thresholds and the severity used for the "anomaly" CVD variants.
	"workers" > 1 evaluates the variants on a thread pool.

	Raises ConfigurationError
	"""

	uniformity: float = UNIFORMITY_THRESHOLD
	smoothness: float = SMOOTHNESS_THRESHOLD
	cvd: float = CVD_THRESHOLD
	anomaly_severity: float = ANOMALY_SEVERITY
	workers: int = 1

	def __post_init__(self):
		for name in ('uniformity', 'smoothness', 'cvd'):
			value = getattr(self, name)
			if not np.isfinite(value) or value < 0:
				raise ConfigurationError(f'{name} threshold must be a finite number >= 0, got {value}')
		if not np.isfinite(self.anomaly_severity) or not 0 <= self.anomaly_severity <= 100:
			raise ConfigurationError(
				f'Anomaly severity must be in [0, 100], got {self.anomaly_severity}')
		if int(self.workers) != self.workers or self.workers < 1:
			raise ConfigurationError(f'Worker count must be a positive integer, got {self.workers}')

	def thresholds(self):
		"""
		Returns (dict) the thresholds in report form.
		"""
		return {
			'uniformityRms'		: sig9(self.uniformity),
			'smoothness'		: sig9(self.smoothness),
			'cvdConsistency'	: sig9(self.cvd)
		}

	def cvd_specs(self):
		"""
		Returns list of CvdSpec audited: both red-green deficiencies at the
		anomaly severity, then as dichromacies.
		"""
		return cvd_specs(self.anomaly_severity)


def cvd_specs(anomaly_severity = ANOMALY_SEVERITY):
	"""
	Returns the four CVD variants evaluated for consistency.
	"""
	return [
		CvdSpec(DEUTAN, anomaly_severity),
		CvdSpec(PROTAN, anomaly_severity),
		CvdSpec(DEUTAN, 100.0),
		CvdSpec(PROTAN, 100.0)
	]


# ---------------------------
# Profile

@dataclass
class MetricProfile:
	"""
	Line statistics of a single colormap (or a simulated variant of one).

	"uniformity_rms" and "smoothness" are None where the colormap is too short
	or has no perceptual range. "clipping" is only set on CVD variants.
	"""

	lightness: np.ndarray
	deltas: np.ndarray
	range: float
	uniformity_rms: float
	monotonicity: str
	smoothness: float
	clipping: float = None
	jab: np.ndarray = field(default = None, repr = False)
	colormap: Colormap = field(default = None, repr = False)

	def to_dict(self):
		result = {
			'lightness'		: [ sig9(value) for value in self.lightness ],
			'deltas'		: [ sig9(value) for value in self.deltas ],
			'range'			: sig9(self.range),
			'uniformityRms'	: _sig9_or_none(self.uniformity_rms),
			'monotonicity'	: self.monotonicity,
			'smoothness'	: _sig9_or_none(self.smoothness)
		}
		if self.clipping is not None:
			result['clipping'] = sig9(self.clipping)
		return result


def _sig9_or_none(value):
	return None if value is None else sig9(value)


# ---------------------------
# Support functions

def _jab(cmap, vc):
	return srgb_to_jab(cmap.samples, vc)

def _deltas(jab):
	return delta_e(jab[:-1], jab[1:])

def _direction(lightness):
	steps = np.diff(lightness)
	if np.all(steps > 0):
		return INCREASING
	if np.all(steps < 0):
		return DECREASING
	return NON_MONOTONIC

def _uniformity(deltas, name):
	mean = fsum(deltas) / len(deltas)
	if mean <= 0.0:
		raise DegenerateColormapError(name, 'zero perceptual range')
	if np.all(deltas == deltas[0]):
		return 0.0
	deviations = (deltas - mean) / mean
	return sqrt(fsum(deviations * deviations) / len(deltas))

def _turning(jab):
	segments = np.diff(jab, axis = 0)
	lengths = np.sqrt(np.sum(segments * segments, axis = 1))
	segments = segments[lengths >= MIN_SEGMENT]
	if len(segments) < 2:
		return 0.0
	before, after = segments[:-1], segments[1:]
	cross = np.cross(before, after)
	angles = np.arctan2(np.sqrt(np.sum(cross * cross, axis = 1)), np.sum(before * after, axis = 1))
	return float(np.max(angles))

def diverging_split(lightness, center_index):
	"""
	Returns (int) the index at which a diverging colormap is split in two: the
	interior J' extremum nearest the declared center, or the center itself
	when neither extremum is interior.
	"""
	last = len(lightness) - 1
	center_index = min(max(center_index, 1), last - 1)
	candidates = [ int(index) for index in (np.argmax(lightness), np.argmin(lightness)) \
		if 0 < index < last ]
	if not candidates:
		return center_index
	return min(candidates, key = lambda index: (abs(index - center_index), index))

def _parts(cmap, jab):
	"""
	Returns list of Jab arrays measured separately: two halves sharing their
	split sample for a diverging map, otherwise the whole path.
	"""
	if cmap.kind == DIVERGING and len(jab) >= 3:
		split = diverging_split(jab[:, 0], cmap.center_index)
		return [jab[:split + 1], jab[split:]]
	return [jab]

def _require_samples(cmap, what):
	if len(cmap) < 3:
		raise DegenerateColormapError(cmap.name, f'{what} needs at least 3 samples')


# ---------------------------
# Operations

def lightness_profile(cmap, vc = None):
	"""
	Returns J' of each sample, in order.
	"""
	return _jab(cmap, vc)[:, 0]

def delta_profile(cmap, vc = None):
	"""
	Returns the N - 1 delta E values between adjacent samples. This is the
	discrete perceptual derivative; a uniform colormap has all entries equal.
	"""
	return _deltas(_jab(cmap, vc))

def perceptual_range(cmap, vc = None):
	"""
	Returns (float) the total delta E arc length traversed by the colormap.
	"""
	return fsum(delta_profile(cmap, vc))

def uniformity_rms(cmap, vc = None):
	"""
	Returns (float) the RMS of the relative deviation of each delta E from the
	mean delta E; 0 means perfectly uniform. Diverging maps are measured per
	half and the worse half is returned.

	Raises DegenerateColormapError
	"""
	_require_samples(cmap, 'uniformity')
	return max(_uniformity(_deltas(part), cmap.name) for part in _parts(cmap, _jab(cmap, vc)))

def smoothness(cmap, vc = None):
	"""
	Returns (float) the largest turning angle in radians between successive
	path segments in (J', a', b'). Diverging maps are measured per half.

	Raises DegenerateColormapError
	"""
	_require_samples(cmap, 'smoothness')
	return max(_turning(part) for part in _parts(cmap, _jab(cmap, vc)))

def monotonicity(cmap, vc = None):
	"""
	Returns one of "increasing", "decreasing", "non-monotonic" (strict).
	"""
	return _direction(lightness_profile(cmap, vc))

def metric_profile(cmap, vc = None, *, clipping = None, strict = False):
	"""
	Returns a MetricProfile of the colormap. Unless "strict" is True, a
	degenerate colormap yields None for the statistics it cannot support.

	Raises DegenerateColormapError (strict only)
	"""
	if strict:
		_require_samples(cmap, 'a profile')
	jab = _jab(cmap, vc)
	deltas = _deltas(jab)
	uniformity = turning = None
	if len(cmap) >= 3:
		parts = _parts(cmap, jab)
		turning = max(_turning(part) for part in parts)
		try:
			uniformity = max(_uniformity(_deltas(part), cmap.name) for part in parts)
		except DegenerateColormapError:
			if strict:
				raise
	return MetricProfile(
		lightness = jab[:, 0],
		deltas = deltas,
		range = fsum(deltas),
		uniformity_rms = uniformity,
		monotonicity = _direction(jab[:, 0]),
		smoothness = turning,
		clipping = clipping,
		jab = jab,
		colormap = cmap
	)

def _cvd_profile(cmap, spec, vc):
	variant = simulate_cvd(cmap, spec)
	return metric_profile(variant, vc, clipping = variant.metadata['cvd_clipping'])

def _grayscale_profile(cmap, vc):
	return metric_profile(to_grayscale(cmap, vc), vc)

def _consistency(name, normal, variants):
	if normal.range <= 0.0:
		raise DegenerateColormapError(name, 'zero perceptual range')
	mean_step = normal.range / len(normal.deltas)
	return max(float(np.max(np.abs(variant.deltas - normal.deltas))) for variant in variants) \
		/ mean_step

def cvd_consistency(cmap, vc = None, anomaly_severity = ANOMALY_SEVERITY):
	"""
	Returns (float) the largest local contrast change caused by any of the four
	red-green CVD variants, relative to the mean normal-vision step:

		max over variants v and positions i of |delta_v,i - delta_i| / (range / (N - 1))

	0 means every step stays as distinguishable as it is with normal vision.

	Raises DegenerateColormapError
	"""
	_require_samples(cmap, 'CVD consistency')
	normal = metric_profile(cmap, vc)
	return _consistency(cmap.name, normal,
		[ _cvd_profile(cmap, spec, vc) for spec in cvd_specs(anomaly_severity) ])

def lightness_monotone(lightness, kind, center_index = None):
	"""
	Returns True if J' is strictly monotone. For a diverging map each half must
	be strictly monotone in opposite directions, with the turn within one
	sample of the declared center.
	"""
	lightness = np.asarray(lightness, dtype = float)
	if kind == DIVERGING and len(lightness) >= 3:
		split = diverging_split(lightness, center_index)
		first = _direction(lightness[:split + 1])
		second = _direction(lightness[split:])
		return abs(split - center_index) <= 1 \
			and NON_MONOTONIC not in (first, second) \
			and first != second
	return _direction(lightness) != NON_MONOTONIC

def evaluate_verdicts(kind, center_index, normal, grayscale, consistency, options):
	"""
	Returns (dict) the four named verdicts. "normal" and "grayscale" may be
	MetricProfile instances or their serialized dicts.
	"""
	def _get(profile, key, attr):
		return profile[key] if isinstance(profile, dict) else getattr(profile, attr)
	monotone = lightness_monotone(_get(normal, 'lightness', 'lightness'), kind, center_index)
	return {
		'perceptuallyUniform'	: bool(
			_get(normal, 'uniformityRms', 'uniformity_rms') <= options['uniformityRms'] \
			and _get(normal, 'smoothness', 'smoothness') <= options['smoothness']),
		'lightnessMonotone'		: monotone,
		'grayscaleSafe'			: lightness_monotone(
			_get(grayscale, 'lightness', 'lightness'), kind, center_index),
		'cvdFriendly'			: bool(consistency <= options['cvdConsistency'])
	}

def verdicts_from_report(data):
	"""
	Recomputes the verdicts of a serialized AuditReport from its stored
	profiles and thresholds alone.
	"""
	target = data['target']
	center_index = None
	if 'center' in target:
		center_index = int(round(target['center'] * (target['samples'] - 1)))
	return evaluate_verdicts(target['kind'], center_index,
		data['profiles'][NORMAL], data['profiles'][GRAYSCALE],
		data['cvdConsistency'], data['thresholds'])


# ---------------------------
# Audit

class AuditReport:
	"""
	The machine-readable diagnostic sheet of a colormap: profiles of the normal,
	grayscale and four CVD variants, CVD consistency, and verdicts together
	with the thresholds which produced them.
	"""

	def __init__(self, cmap, conditions, options, profiles, cvd_consistency):
		self.colormap = cmap
		self.conditions = conditions
		self.options = options
		self.profiles = profiles
		self.cvd_consistency = cvd_consistency
		self.verdicts = evaluate_verdicts(cmap.kind, cmap.center_index,
			profiles[NORMAL], profiles[GRAYSCALE], cvd_consistency, options.thresholds())

	@property
	def passed(self):
		"""
		Returns True if every verdict is True.
		"""
		return all(self.verdicts.values())

	def failed_verdicts(self):
		return [ name for name, verdict in self.verdicts.items() if not verdict ]

	def to_dict(self):
		target = {
			'name'		: self.colormap.name,
			'kind'		: self.colormap.kind,
			'samples'	: len(self.colormap)
		}
		if self.colormap.center is not None:
			target['center'] = sig9(self.colormap.center)
		conditions = {
			key : [ sig9(v) for v in value ] if isinstance(value, (tuple, list)) \
				else sig9(value) if isinstance(value, float) else value \
				for key, value in self.conditions.summary().items()
		}
		conditions['anomalySeverity'] = sig9(self.options.anomaly_severity)
		return {
			'target'			: target,
			'conditions'		: conditions,
			'thresholds'		: self.options.thresholds(),
			'profiles'			: {
				label : profile.to_dict() for label, profile in self.profiles.items()
			},
			'cvdConsistency'	: sig9(self.cvd_consistency),
			'verdicts'			: self.verdicts
		}

	def to_json(self):
		return json.dumps(self.to_dict(), indent = '\t') + '\n'


def audit(cmap, vc = None, options = None):
	"""
	Measures the colormap with normal vision, in grayscale, and under the four
	red-green CVD variants, and returns an AuditReport.

	Raises DegenerateColormapError
	"""
	vc = vc or DEFAULT_CONDITIONS
	options = options or AuditOptions()
	_require_samples(cmap, 'an audit')
	specs = options.cvd_specs()
	jobs = {
		NORMAL		: partial(metric_profile, cmap, vc, strict = True),
		GRAYSCALE	: partial(_grayscale_profile, cmap, vc)
	}
	for spec in specs:
		jobs.setdefault(spec.label, partial(_cvd_profile, cmap, spec, vc))
	if options.workers > 1:
		with ThreadPoolExecutor(max_workers = options.workers) as executor:
			results = list(executor.map(lambda job: job(), jobs.values()))
	else:
		results = [ job() for job in jobs.values() ]
	profiles = dict(zip(jobs.keys(), results))
	consistency = _consistency(cmap.name, profiles[NORMAL],
		[ profiles[spec.label] for spec in specs ])
	report = AuditReport(cmap, vc, options, profiles, consistency)
	logging.debug('Audit of %s: %s', cmap.name, report.verdicts)
	return report


# ---------------------------
# Comparison

class ComparisonRow(NamedTuple):
	"""
	One line of a comparison table. Statistics a colormap cannot support are
	None.
	"""
	name: str
	range: float
	uniformity_rms: float
	monotonicity: str
	cvd_consistency: float

	def to_dict(self):
		return {
			'name'				: self.name,
			'range'				: sig9(self.range),
			'uniformityRms'		: _sig9_or_none(self.uniformity_rms),
			'monotonicity'		: self.monotonicity,
			'cvdConsistency'	: _sig9_or_none(self.cvd_consistency)
		}


def comparison_row(cmap, vc = None, anomaly_severity = ANOMALY_SEVERITY):
	"""
	Returns the ComparisonRow of a single colormap.
	"""
	profile = metric_profile(cmap, vc)
	try:
		consistency = cvd_consistency(cmap, vc, anomaly_severity)
	except DegenerateColormapError:
		consistency = None
	return ComparisonRow(cmap.name, profile.range, profile.uniformity_rms,
		profile.monotonicity, consistency)

def compare(cmaps, vc = None, anomaly_severity = ANOMALY_SEVERITY, progress = None):
	"""
	Returns list of ComparisonRow sorted by perceptual range, largest first,
	ties broken by name. "progress", if given, is called after each colormap.

	Raises DomainError when fewer than 2 colormaps are given
	"""
	if len(cmaps) < 2:
		raise DomainError(f'Comparison needs at least 2 colormaps, got {len(cmaps)}', len(cmaps))
	rows = []
	for cmap in cmaps:
		rows.append(comparison_row(cmap, vc, anomaly_severity))
		if progress is not None:
			progress()
	return sorted(rows, key = lambda row: (-row.range, row.name))


#  end cmaudit/metrics.py
