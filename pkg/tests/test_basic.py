import json

import pytest

from services.suite_manager import SUITE_MODULES, suite_manager
from verify import EXIT_OK, EXIT_USAGE, main

QUICK = {"primes": [3], "cases": ["inert"], "samples": 50}


def test_suites_registered():
    """Every suite module registers under its CLI name, in run order."""
    assert suite_manager.names() == [
        "local-field", "characters", "gl2", "zeta", "ps-functional",
        "steinberg", "supercuspidal", "spectral", "constants",
    ]
    assert len(SUITE_MODULES) == 9


def test_api_suites(client):
    """The suite list carries names and descriptions."""
    response = client.get('/api/suites')
    assert response.status_code == 200
    names = [suite['name'] for suite in response.get_json()['suites']]
    assert "spectral" in names and "constants" in names


def test_api_run_suite(client):
    """Running a suite returns the report and makes it the latest one."""
    response = client.post('/api/suites/local-field/run', json=QUICK)
    assert response.status_code == 200
    data = response.get_json()
    assert data['suite'] == "local-field"
    assert data['summary']['fail'] == 0
    latest = client.get('/api/reports/latest')
    assert latest.status_code == 200
    assert latest.get_json()['suite'] == "local-field"


def test_api_unknown_suite(client):
    """Unknown suite names are 404s."""
    response = client.post('/api/suites/nonexistent/run', json={})
    assert response.status_code == 404
    assert 'error' in response.get_json()


@pytest.mark.parametrize("body", [{"primes": [4]}, {"colour": "red"}, {"tolerance": -1}, [1, 2]])
def test_api_invalid_body(client, body):
    """Invalid configurations are 400s."""
    response = client.post('/api/suites/local-field/run', json=body)
    assert response.status_code == 400
    assert 'error' in response.get_json()


def test_api_sigma_bounds(client):
    """Bounds on Sigma at |p| = 5."""
    response = client.get('/api/constants/sigma-bounds/5')
    assert response.status_code == 200
    data = response.get_json()
    assert data['lower'] == "55/16"
    assert data['upper'] == "155/36"
    assert data['limit'] == 4
    assert data['lower_positive']


def test_api_sigma_bounds_invalid(client):
    """A norm below 2 is rejected."""
    assert client.get('/api/constants/sigma-bounds/1').status_code == 400


def test_not_found(client):
    """Routes outside the API are 404s."""
    assert client.get('/nonexistent-page').status_code == 404


def test_cli_pass(tmp_path, capsys):
    """A passing run exits 0 and writes the report where asked."""
    out = tmp_path / "local.json"
    code = main(["--suite", "local-field", "--p", "3", "--case", "inert", "--samples", "50", "--out", str(out)])
    assert code == EXIT_OK
    assert json.loads(out.read_text())['summary']['fail'] == 0
    assert "✓ local-field" in capsys.readouterr().out


def test_cli_config_file(tmp_path):
    """Flags override the config file."""
    cfg = tmp_path / "run.cfg"
    cfg.write_text("suite = nonexistent\np = 3\ncase = inert\nsamples = 50\n")
    out = tmp_path / "local.json"
    assert main(["--config", str(cfg), "--suite", "local-field", "--out", str(out)]) == EXIT_OK
    assert main(["--config", str(cfg), "--out", str(tmp_path / "none.json")]) == EXIT_USAGE


def test_cli_unknown_suite(tmp_path):
    """An unknown suite is a usage error and no report is written."""
    out = tmp_path / "never.json"
    assert main(["--suite", "nonexistent", "--out", str(out)]) == EXIT_USAGE
    assert not out.exists()


def test_cli_bad_flags():
    """Malformed flags exit with the usage code."""
    with pytest.raises(SystemExit) as excinfo:
        main(["--p", "three"])
    assert excinfo.value.code == EXIT_USAGE
