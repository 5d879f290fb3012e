import json

import httpx
import pytest
from fastapi.testclient import TestClient

import radixbench.cli as cli
from radixbench.service.app import app
from radixbench.service.schemas import VerifyResponse


@pytest.fixture(autouse=True)
def clean_seed_env(monkeypatch):
    monkeypatch.delenv("RADIXBENCH_SEED", raising=False)


def test_resolve_seed_precedence(monkeypatch):
    assert cli._resolve_seed(None) == 0
    monkeypatch.setenv("RADIXBENCH_SEED", "42")
    assert cli._resolve_seed(None) == 42
    # an explicit flag beats the environment
    assert cli._resolve_seed(5) == 5
    monkeypatch.setenv("RADIXBENCH_SEED", "  ")
    assert cli._resolve_seed(None) == 0
    monkeypatch.setenv("RADIXBENCH_SEED", "pi")
    with pytest.raises(ValueError):
        cli._resolve_seed(None)


def test_verify_exits_zero_on_pass(capsys):
    rc = cli.main(["verify", "--radix", "2", "--width", "4", "--arch", "csa"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "| result | pass |" in out


def test_verify_exits_one_on_failure(monkeypatch, capsys):
    failing = VerifyResponse(
        circuit="x", mode="exhaustive", vectors=3, passed=False, blocks=[]
    )
    monkeypatch.setattr(
        "radixbench.service.handlers.handle_verify", lambda req: failing
    )
    rc = cli.main(["verify", "--radix", "2", "--width", "4"])
    capsys.readouterr()
    assert rc == 1


def test_usage_errors_exit_two(capsys):
    cases = [
        ["verify", "--radix", "4", "--width", "4"],
        ["verify", "--width", "4", "--mul", "--arch", "cla"],
        ["verify", "--radix", "2"],
        ["cost", "--width", "4", "--cost-preset", "unobtainium"],
        ["tables", "XVII"],
        ["bogus-command"],
    ]
    for argv in cases:
        assert cli.main(argv) == 2, argv
        capsys.readouterr()


def test_bad_seed_env_exits_two(monkeypatch, capsys):
    monkeypatch.setenv("RADIXBENCH_SEED", "pi")
    rc = cli.main(["verify", "--radix", "2", "--width", "4"])
    err = capsys.readouterr().err
    assert rc == 2
    assert "RADIXBENCH_SEED" in err


def test_env_seed_keeps_sampled_runs_reproducible(monkeypatch, capsys):
    argv = [
        "verify", "--radix", "2", "--width", "12",
        "--cap", "10", "--samples", "200", "--format", "json",
    ]
    monkeypatch.setenv("RADIXBENCH_SEED", "11")
    assert cli.main(argv) == 0
    first = capsys.readouterr().out
    assert cli.main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    assert json.loads(first)["mode"] == "sampled"


def test_counts_markdown(capsys):
    rc = cli.main(["counts", "--radix", "3", "--width", "5", "--mul"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "## cell counts" in out
    assert "| Total equivalent FA | 39.5 |" in out


def test_cost_csv(capsys):
    rc = cli.main(
        ["cost", "--radix", "2", "--width", "8", "--arch", "cla", "--format", "csv"]
    )
    out = capsys.readouterr().out
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].startswith("# transistor cost")
    assert lines[1] == "kind,count,unit,subtotal"
    assert lines[-1].startswith("total,")


def test_compare_json_contains_required_discrepancies(capsys):
    rc = cli.main(["compare", "--width", "8", "--format", "json"])
    out = capsys.readouterr().out
    assert rc == 0
    doc = json.loads(out)
    keys = [d["key"] for d in doc["discrepancies"]]
    assert "cla-ternary-total" in keys
    assert "ternary-reduction-ha-count" in keys


def test_tables_roundtrip(capsys):
    rc = cli.main(["tables"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.split() == ["I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"]

    rc = cli.main(["tables", "II", "--format", "csv"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "Ai,Bi,Pi,Ci" in out
    assert "2,2,1,1" in out


def test_serve_subcommand_parses():
    args = cli.build_parser().parse_args(["serve", "--port", "9"])
    assert args.command == "serve" and args.port == 9


class _HttpxShim:
    """Routes the CLI's remote calls into an in-process test client."""

    HTTPError = httpx.HTTPError

    def __init__(self, client):
        self._client = client

    def post(self, url, json=None, timeout=None):
        return self._client.post(url.removeprefix("http://svc"), json=json)

    def get(self, url, timeout=None):
        return self._client.get(url.removeprefix("http://svc"))


def test_remote_mode_matches_local(monkeypatch, capsys):
    argv = ["counts", "--radix", "3", "--width", "4", "--mul", "--format", "json"]
    assert cli.main(argv) == 0
    local = json.loads(capsys.readouterr().out)

    monkeypatch.setattr(cli, "httpx", _HttpxShim(TestClient(app)))
    assert cli.main(argv + ["--server", "http://svc"]) == 0
    remote = json.loads(capsys.readouterr().out)
    assert remote == local


def test_remote_verify_and_tables(monkeypatch, capsys):
    monkeypatch.setattr(cli, "httpx", _HttpxShim(TestClient(app)))
    rc = cli.main(
        ["verify", "--radix", "2", "--width", "3", "--server", "http://svc"]
    )
    out = capsys.readouterr().out
    assert rc == 0 and "| result | pass |" in out

    rc = cli.main(["tables", "IX", "--server", "http://svc"])
    out = capsys.readouterr().out
    assert rc == 0 and "24i" in out

    # remote 404 surfaces as a usage error
    rc = cli.main(["tables", "XVII", "--server", "http://svc"])
    err = capsys.readouterr().err
    assert rc == 2 and "404" in err
