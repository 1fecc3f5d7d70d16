import pytest

from powergraph import __version__
from powergraph.constants import CLAIM_IDS, FAMILY_CONFIG
from powergraph.errors import GraphValidationError
from powergraph.models.run_models import RunConfig, TrialOutcome
from powergraph.system.parameters import build_run_config, parse_int_set, parse_m_values
from powergraph.system.settings import Settings, load_settings
from powergraph.system.toolkit_system import PowerGraphSystem


def test_system_initialization():
    """O sistema conhece as quatro famílias e os seis subcomandos."""
    system = PowerGraphSystem()
    assert set(system.familias) == {"Gm", "Hm", "cayley", "random"}
    assert set(system._executors) == {"gen", "power", "verify", "claims", "convergence", "scan"}
    assert system.workers == 1


def test_version_and_claim_ids():
    assert __version__
    assert CLAIM_IDS == ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8")


def test_family_config_entries():
    for config in FAMILY_CONFIG.values():
        assert {"nome", "emoji", "descricao"} <= set(config)


def test_settings_defaults_from_yaml():
    settings = load_settings()
    assert settings.threads == 1
    assert settings.exhaustive_limit == 300
    assert settings.output_dir == "outputs"


def test_settings_env_override(monkeypatch):
    """Variáveis POWERGRAPH_* sobrescrevem o YAML."""
    monkeypatch.setenv("POWERGRAPH_THREADS", "4")
    monkeypatch.setenv("POWERGRAPH_SAMPLE_SIZE", "500")
    load_settings.cache_clear()
    settings = load_settings()
    assert settings.threads == 4
    assert settings.sample_size == 500
    assert PowerGraphSystem(settings).workers == 4


def test_settings_reject_invalid_values(monkeypatch):
    monkeypatch.setenv("POWERGRAPH_THREADS", "0")
    load_settings.cache_clear()
    with pytest.raises(ValueError):
        load_settings()


def test_settings_model_bounds():
    with pytest.raises(ValueError):
        Settings(attempt_budget=0)


def test_parse_m_values():
    assert parse_m_values("1..5") == [1, 2, 3, 4, 5]
    assert parse_m_values("3,5,10") == [3, 5, 10]
    assert parse_m_values("7") == [7]
    with pytest.raises(GraphValidationError):
        parse_m_values("a..b")


def test_parse_int_set_sorts_and_dedupes():
    assert parse_int_set("3,1,3") == [1, 3]


def test_build_run_config_requires_r():
    with pytest.raises(GraphValidationError, match="verify requires --r"):
        build_run_config("verify", input_path="g.txt", r=None)


def test_build_run_config_scan():
    config = build_run_config("scan", n=24, d=4, r=5, trials=10, seed=7, loops=False)
    assert isinstance(config, RunConfig)
    assert config.trials == 10


def test_trial_outcome_error_line():
    outcome = TrialOutcome(trial=2, seed=99, status="error", error="boom")
    assert outcome.to_line() == "trial=2 seed=99 error=boom"


def test_console_timers_nest_by_label():
    from powergraph.utils.console_time import Console, format_elapsed, timed

    Console.time("X")
    Console.time("X")
    assert Console.time_end("X") >= 0
    assert Console.time_end("X") >= 0
    with pytest.raises(ValueError):
        Console.time_end("X")
    with timed("Y"):
        pass
    assert format_elapsed(75) == "1m 15.00s"


def test_default_seed_comes_from_settings(monkeypatch):
    """Sem --seed, o sistema usa default_seed (YAML ou POWERGRAPH_DEFAULT_SEED)."""
    config = build_run_config("scan", n=24, d=4, r=5)
    assert config.seed is None
    assert PowerGraphSystem().seed_for(config) == 0

    monkeypatch.setenv("POWERGRAPH_DEFAULT_SEED", "11")
    load_settings.cache_clear()
    assert PowerGraphSystem().seed_for(config) == 11
    assert PowerGraphSystem().seed_for(build_run_config("scan", n=24, d=4, r=5, seed=3)) == 3


def test_run_config_rejects_unknown_family():
    with pytest.raises(GraphValidationError):
        build_run_config("gen", family="petersen")
