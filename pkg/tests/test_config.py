import pytest

from dualinherit.config import Config, ConfigError, format_config, parse_config


def test_empty_is_defaults():
    assert parse_config("") == Config()
    assert parse_config("# only a comment\n\n") == Config()


def test_override_mode():
    assert parse_config("mode = socializers").mode == "socializers"
    assert parse_config("mode = breeders  # control").mode == "breeders"


def test_tau_invariant():
    with pytest.raises(ConfigError, match="line 1.*tau"):
        parse_config("tau = 0.9")


def test_unknown_key_names_line():
    with pytest.raises(ConfigError, match="line 3: unknown key 'banana'"):
        parse_config("N0 = 10\n\nbanana = 2\n")


def test_malformed_value():
    with pytest.raises(ConfigError, match="line 1.*'ten'.*N0"):
        parse_config("N0 = ten")


def test_missing_equals():
    with pytest.raises(ConfigError, match="line 2"):
        parse_config("N0 = 1\nmode socializers\n")


@pytest.mark.parametrize(
    "text",
    [
        "mode = hermits",
        "radius = 2",
        "n_sites = 0",
        "G = 5\nT = 10",
        "point_rate = 1.5",
        "metabolic = 0",
        "child_endowment = 500",
        "runs = 0",
        "capacity_min = 50\ncapacity_max = 10",
    ],
)
def test_out_of_domain(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_cross_field_error_points_at_line():
    with pytest.raises(ConfigError, match="line 2"):
        parse_config("T = 10\nG = 5\n")


def test_round_trip():
    cfg = Config(mode="breeders", N0=7, tau=0.25)
    assert parse_config(format_config(cfg)) == cfg


def test_econ_view():
    econ = Config(metabolic=3.5).econ
    assert econ.metabolic == 3.5
