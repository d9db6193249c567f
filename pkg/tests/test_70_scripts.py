#  tests/test_70_scripts.py
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
import json
import pytest
from cmaudit import *
from cmaudit.io import load_colormap
from cmaudit.metrics import verdicts_from_report
from cmaudit.scripts import EXIT_OK, EXIT_FAILED, EXIT_ERROR, cm_audit, cm_compare, \
	cm_export, cm_generate, cm_list
from cmaudit.__main__ import main as cmaudit_main
from . import *


def test_audit_jet(tmp_path, capsys):
	report_path = tmp_path / 'jet.json'
	svg_path = tmp_path / 'jet.svg'
	assert cm_audit.main(['jet', '--json', str(report_path), '--svg', str(svg_path)]) == EXIT_FAILED
	data = json.loads(report_path.read_text())
	assert data['target']['name'] == 'jet'
	assert not any(data['verdicts'].values())
	assert verdicts_from_report(data) == data['verdicts']
	assert svg_path.read_text().startswith('<?xml')
	assert 'FAIL  cvdFriendly' in capsys.readouterr().out

def test_audit_json_stdout(capsys):
	assert cm_audit.main(['jet', '--json', '-']) == EXIT_FAILED
	assert json.loads(capsys.readouterr().out)['target']['samples'] == 256

def test_audit_quiet(capsys):
	assert cm_audit.main(['gray', '-q']) == EXIT_FAILED
	assert capsys.readouterr().out == ''

def test_audit_input_errors(capsys):
	assert cm_audit.main(['missing.csv']) == EXIT_ERROR
	assert 'File not found' in capsys.readouterr().err
	assert cm_audit.main(['nope']) == EXIT_ERROR
	assert 'available' in capsys.readouterr().err
	assert cm_audit.main([str(colormap_path('bad_number.csv'))]) == EXIT_ERROR
	assert 'line 3' in capsys.readouterr().err
	assert cm_audit.main(['jet', '--threshold-cvd', '-1']) == EXIT_ERROR

def test_audit_conflicting_outputs(tmp_path):
	same = str(tmp_path / 'same')
	with pytest.raises(SystemExit):
		cm_audit.main(['jet', '--json', same, '--svg', same])
	with pytest.raises(SystemExit):
		cm_audit.main(['jet', '--svg', '-'])

def test_audit_file(tmp_path):
	assert cm_audit.main([str(colormap_path('diverging.json')), '-q']) in (EXIT_OK, EXIT_FAILED)
	assert cm_audit.main([str(colormap_path('single_row.csv')), '-q']) == EXIT_ERROR

def test_generate(tmp_path, capsys):
	output = tmp_path / 'gray_ramp.csv'
	assert cm_generate.main([str(spec_path('gray_ramp.json')), '-o', str(output), '--audit']) == EXIT_OK
	assert len(load_colormap(output)) == 256
	assert 'PASS  perceptuallyUniform' in capsys.readouterr().out

def test_generate_stdout(capsys):
	assert cm_generate.main([str(spec_path('gray_ramp.json')), '--format', 'hex']) == EXIT_OK
	lines = capsys.readouterr().out.splitlines()
	assert len(lines) == 256
	assert lines[0] == '#000000'
	assert lines[-1] == '#FFFFFF'

def test_generate_errors(tmp_path, capsys):
	output = tmp_path / 'never.csv'
	assert cm_generate.main([str(spec_path('out_of_gamut.json')), '-o', str(output)]) == EXIT_FAILED
	assert 'at t=' in capsys.readouterr().err
	assert not output.exists()
	assert cm_generate.main([str(spec_path('malformed.json'))]) == EXIT_ERROR
	assert cm_generate.main([str(spec_path('cyclic.json'))]) == EXIT_ERROR
	assert cm_generate.main([str(spec_path('nothing_here.json'))]) == EXIT_ERROR

def test_generate_clip(tmp_path):
	output = tmp_path / 'too_bright.json'
	assert cm_generate.main([str(spec_path('out_of_gamut.json')), '--gamut', 'clip',
		'-o', str(output)]) == EXIT_OK
	data = json.loads(output.read_text())
	assert data['name'] == 'too_bright'
	assert len(data['colors']) == 64

def test_compare(capsys):
	assert cm_compare.main(['jet', 'gray']) == EXIT_OK
	lines = capsys.readouterr().out.splitlines()
	assert lines[0].split('\t') == ['name', 'range', 'uniformityRms', 'monotonicity',
		'cvdConsistency']
	assert [ line.split('\t')[0] for line in lines[1:] ] == ['jet', 'gray']
	assert cm_compare.main(['gray', 'gray']) == EXIT_OK
	capsys.readouterr()
	assert cm_compare.main(['jet']) == EXIT_ERROR
	assert cm_compare.main(['jet', 'nope']) == EXIT_ERROR

def test_compare_json(capsys):
	assert cm_compare.main(['gray', 'jet', '--json', '-']) == EXIT_OK
	rows = json.loads(capsys.readouterr().out)
	assert [ row['name'] for row in rows ] == ['jet', 'gray']

def test_export(tmp_path, capsys):
	output = tmp_path / 'jet_sub.json'
	assert cm_export.main(['jet', '--sub', '0.25', '0.75', '--samples', '16', '--reverse',
		'--name', 'middle', '-o', str(output)]) == EXIT_OK
	cmap = load_colormap(output)
	assert cmap.name == 'middle'
	assert len(cmap) == 16
	assert cm_export.main(['jet', '--qualitative', '5', '--format', 'hex']) == EXIT_OK
	assert len(capsys.readouterr().out.splitlines()) == 5
	assert cm_export.main(['jet', '--cvd', 'deutan:50', '--grayscale']) == EXIT_OK
	lines = capsys.readouterr().out.splitlines()
	assert len(lines) == 256
	assert all(len(set(line.split(','))) == 1 for line in lines)
	assert cm_export.main(['jet', '--cvd', 'achromat']) == EXIT_ERROR
	assert cm_export.main(['jet', '--sub', '0.8', '0.2']) == EXIT_ERROR

def test_list(capsys):
	assert cm_list.main([str(colormap_path('gray3.hex'))]) == EXIT_OK
	lines = capsys.readouterr().out.splitlines()
	names = [ line.split('\t')[0] for line in lines ]
	assert names[:2] == ['gray', 'gray3']
	assert 'jet\tembedded\t256\tsequential' in lines
	assert 'gray3\tfile\t3\tsequential' in lines
	assert cm_list.main([str(colormap_path('bad_range.csv'))]) == EXIT_ERROR

def test_dispatch(capsys):
	assert cmaudit_main(['audit', 'gray', '-q']) == EXIT_FAILED
	assert cmaudit_main([]) == EXIT_OK
	out = capsys.readouterr().out
	assert 'cm-audit' in out
	assert 'cm-generate' in out
	assert cmaudit_main(['unknown']) == EXIT_ERROR


#  end tests/test_70_scripts.py
