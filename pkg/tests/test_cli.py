import json

import numpy as np
import pytest

from ann_workbench.algebra import FiniteRing, cyclic_ring, ring_bimodule
from ann_workbench.model import SkeletalModel, trivial_model
from ann_workbench.search import SearchOutcome
from ann_workbench.search.services.hunter import TheoremViolation
from ann_workbench.storage import dump_model, load_model
from mains import workbench
from mains.workbench import main


def _run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def _document(out):
    return json.loads(out)


def test_check_trivial(capsys, write_model, trivial_z2):
    status, out, _ = _run(capsys, 'check', str(write_model(trivial_z2)))
    assert status == 0
    document = _document(out)
    assert document['passed'] is True
    assert document['suite'] == 'ann'
    assert document['tool'] == 'ann-workbench'


def test_check_d14_violator(capsys, write_model, d14_violator):
    status, out, _ = _run(capsys, 'check', str(write_model(d14_violator)), '--suite', 'ann3')
    assert status == 1
    document = _document(out)
    assert document['failed'] == ['d1.4']
    entry = next(d for d in document['diagrams'] if d['diagram'] == 'd1.4')
    assert [f['assignment'] for f in entry['failures']] == [[1, 1]]


def test_check_text_report(capsys, write_model, d14_violator):
    status, out, _ = _run(capsys, 'check', str(write_model(d14_violator)), '--suite', 'ann3', '--format', 'text')
    assert status == 1
    assert out.startswith("suite ann3 on trivial: FAILED (1 of 2 diagrams)")
    assert "(1, 1)" in out


def test_non_associative_ring_is_an_input_error(capsys, write_json):
    x = np.arange(3)
    document = {
        'ring': {'order': 3, 'add': ((x[:, None] + x) % 3).tolist(), 'mul': ((x[:, None] + 1 + 0 * x) % 3).tolist()},
        'module': {'order': 1, 'add': [[0]], 'left_action': [[0]] * 3, 'right_action': [[0, 0, 0]]},
    }
    status, out, err = _run(capsys, 'check', str(write_json(document)))
    assert status == 2
    assert out == ""
    assert err.startswith("error: ")
    assert "multiplicative associativity" in err


@pytest.mark.parametrize("text", ["{not json", '{"ring": {}}', '{"ring": 1, "module": 2, "extra": 3}'])
def test_malformed_files(capsys, tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text, encoding="utf-8")
    status, _, err = _run(capsys, 'check', str(path))
    assert status == 2
    assert "bad.json" in err


def test_missing_file(capsys, tmp_path):
    status, _, err = _run(capsys, 'derive', str(tmp_path / "absent.json"))
    assert status == 2
    assert "cannot read" in err


def test_derive_trivial(capsys, write_model, trivial_z2):
    status, out, _ = _run(capsys, 'derive', str(write_model(trivial_z2)))
    assert status == 0
    document = _document(out)
    assert document['lhat']['table'] == [0, 0]
    assert document['rhat']['table'] == [0, 0]


def test_derive_inconsistent(capsys, write_model, lhat_inconsistent):
    status, out, _ = _run(capsys, 'derive', str(write_model(lhat_inconsistent)))
    assert status == 1
    document = _document(out)
    assert document['consistent'] is False
    assert document['lhat']['conflicts'] == [{'A': 1, 'X': 1, 'candidate': 1}]
    assert document['rhat']['consistent'] is True


def test_derive_text(capsys, write_model, lhat_inconsistent):
    status, out, _ = _run(capsys, 'derive', str(write_model(lhat_inconsistent)), '--format', 'text')
    assert status == 1
    assert "lhat: [0, 0] (INCONSISTENT)" in out


def test_validate(capsys, write_model, trivial_z2, m2):
    assert _run(capsys, 'validate', str(write_model(trivial_z2)))[0] == 0

    broken = trivial_model(cyclic_ring(2).patched(mul={(1, 1): 0}), m2)
    status, out, _ = _run(capsys, 'validate', str(write_model(broken, "broken.json")))
    assert status == 2
    report = _document(out)['reports'][0]
    assert report['subject'] == 'ring'
    assert report['violations'] == [{'law': 'multiplicative identity', 'witness': [1], 'detail': ''}]


def test_explain_trivial(capsys, write_model, trivial_z2):
    status, out, _ = _run(capsys, 'explain', str(write_model(trivial_z2)), 'd1.4', '--at', '1,1')
    assert status == 0
    assert out.endswith("lhs value 0, rhs value 0: equal\n")


def test_explain_violator(capsys, write_model, d14_violator):
    status, out, _ = _run(capsys, 'explain', str(write_model(d14_violator)), 'd1.4', '--at', '1,1')
    assert status == 1
    assert "L(1,X,Y)" in out
    assert out.endswith("lhs value 1, rhs value 0: unequal\n")


def test_explain_unit_diagram(capsys, write_model, lhat_inconsistent):
    status, out, _ = _run(capsys, 'explain', str(write_model(lhat_inconsistent)), 'd1.5', '--at', '1,1')
    assert status == 1
    assert "lhat(A)" in out


def test_explain_naturality(capsys, write_model, trivial_z2):
    path = str(write_model(trivial_z2))
    status, _, _ = _run(capsys, 'explain', path, 'nat_c', '--at', '1,0', '--generics', '1,1')
    assert status == 0
    assert _run(capsys, 'explain', path, 'nat_c', '--at', '1,0')[0] == 2


@pytest.mark.parametrize("argv", [
    ('d1.4', '--at', '1'),
    ('d1.4', '--at', '1,x'),
    ('d1.4', '--at', '1,2'),
    ('d9.9', '--at', '1,1'),
])
def test_explain_input_errors(capsys, write_model, trivial_z2, argv):
    assert _run(capsys, 'explain', str(write_model(trivial_z2)), *argv)[0] == 2


def test_search_trivial_space(capsys, mock_settings):
    status, out, _ = _run(capsys, 'search', '--ring', 'z2', '--module', 'regular', '--vary', 'none')
    assert status == 0
    document = _document(out)
    assert document['visited'] == 1
    assert document['counterexamples'] == []
    assert document['verdict'] == "no counterexample in this space"


def test_search_text(capsys, mock_settings):
    status, out, _ = _run(capsys, 'search', '--vary', 'L', '--format', 'text')
    assert status == 0
    assert "verdict: no counterexample in this space" in out
    assert "independen" not in out


def test_search_report_is_byte_stable(capsys, tmp_path, mock_settings):
    for name in ("first.json", "second.json"):
        assert _run(capsys, 'search', '--vary', 'g,d', '--out', str(tmp_path / name))[0] == 0
    assert (tmp_path / "first.json").read_bytes() == (tmp_path / "second.json").read_bytes()


def test_exhaustive_distributivity_search_is_byte_stable(capsys, tmp_path, monkeypatch, mock_settings):
    monkeypatch.setattr(mock_settings, "SEARCH_BATCH_SIZE", 4096)
    reports = []
    for name in ("first.json", "second.json"):
        assert _run(capsys, 'search', '--ring', 'z2', '--module', 'regular', '--vary', 'L,R', '--out', str(tmp_path / name))[0] == 0
        reports.append((tmp_path / name).read_bytes())
    assert reports[0] == reports[1]
    document = json.loads(reports[0])
    assert document['vary'] == ['ldist', 'rdist']
    assert document['visited'] == 65536
    assert (document['ann_passing'], document['cring_passing'], document['cring_u_passing']) == (2, 2, 2)
    assert document['u_failing'] == 0
    assert document['counterexamples'] == []
    assert document['theorem_violations'] == []
    assert document['verdict'] == "no counterexample in this space"


def test_random_search_is_byte_stable(capsys, tmp_path, mock_settings):
    for name in ("first.json", "second.json"):
        argv = ('search', '--vary', 'L,R', '--random', '--seed', '5', '--count', '100', '--out', str(tmp_path / name))
        assert _run(capsys, *argv)[0] == 0
    first = (tmp_path / "first.json").read_bytes()
    assert first == (tmp_path / "second.json").read_bytes()
    assert json.loads(first)['seed'] == 5


@pytest.mark.parametrize("argv", [
    ('--ring', 'z3', '--module', 'z2'),
    ('--ring', 'z3', '--vary', 'L,R'),
    ('--vary', 'L', '--random'),
    ('--vary', 'Q'),
    ('--no-strict-base',),
])
def test_search_input_errors(capsys, argv):
    assert _run(capsys, 'search', *argv)[0] == 2


def test_base_needs_non_strict_mode(capsys, write_model, trivial_z2, mock_settings):
    path = str(write_model(trivial_z2))
    assert _run(capsys, 'search', '--base', path)[0] == 2
    assert _run(capsys, 'search', '--base', path, '--no-strict-base', '--vary', 'g')[0] == 0


def test_theorem_violation_exits_3(capsys, monkeypatch, tmp_path, trivial_z2):
    def fake_search(space):
        model = SkeletalModel(trivial_z2.ring, trivial_z2.module, name="thm1-violation-0")
        return SearchOutcome(space.describe(), visited=1, violations=(TheoremViolation(0, 'thm1', model),))

    monkeypatch.setattr(workbench, 'find_u_counterexample', fake_search)
    status, out, err = _run(capsys, 'search', '--outdir', str(tmp_path / "found"))
    assert status == 3
    entry = _document(out)['theorem_violations'][0]
    assert entry['property'] == 'thm1'
    assert (tmp_path / "found" / "thm1-violation-0.json").exists()
    assert "theorem violation" in err


def test_model_file_round_trip(write_model, rng, z2, m2):
    model = SkeletalModel.random(z2, m2, rng, name="sample", notes="random tables")
    text = dump_model(model)
    again = load_model(write_model(model))
    assert dump_model(again) == text
    assert again.name == "sample"
    assert '"L": [' in text


def test_unknown_log_level_is_an_input_error(capsys, monkeypatch, write_model, trivial_z2, mock_settings):
    monkeypatch.setattr(mock_settings, "LOG_LEVEL", "LOUD")
    status, out, err = _run(capsys, 'check', str(write_model(trivial_z2)))
    assert status == 2
    assert out == ""
    assert err.startswith("error: unknown log level 'LOUD'")
    monkeypatch.setattr(mock_settings, "LOG_LEVEL", "info")
    assert _run(capsys, 'check', str(write_model(trivial_z2)))[0] == 0


def test_base_over_a_relabelled_ring_is_rejected(capsys, write_model, mock_settings):
    # Z/2 with the roles of 0 and 1 swapped in both tables
    relabelled = FiniteRing.from_tables(add=[[1, 0], [0, 1]], mul=[[0, 1], [1, 1]], zero=1, one=0, name="Z/2")
    model = trivial_model(relabelled, ring_bimodule(relabelled))
    status, _, err = _run(capsys, 'search', '--base', str(write_model(model)), '--no-strict-base', '--vary', 'g')
    assert status == 2
    assert "tables differ" in err


def test_help_documents_ring_range_and_handlers(capsys):
    with pytest.raises(SystemExit):
        main(['search', '--help'])
    assert "1 <= n <= 64" in " ".join(capsys.readouterr().out.split())
    handlers = (workbench.cmd_check, workbench.cmd_derive, workbench.cmd_validate, workbench.cmd_explain,
                workbench.cmd_search)
    assert all(handler.__doc__ for handler in handlers)
