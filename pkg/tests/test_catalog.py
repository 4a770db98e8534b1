import pytest

from torslab.catalog import Catalog, catalog_meta, resolve_algebra
from torslab.errors import ConfigError, UnknownInstance
from torslab.nakayama import parse_algebra
from torslab.verify.suite import COUNTABLE


class TestShippedCatalog:
    def test_instances(self):
        names = [name for name, _, _ in Catalog().instances()]
        assert "linA2" in names and "cyc-3-3" in names
        assert len(names) == len(set(names))

    def test_get(self):
        spec, meta = Catalog().get("linA2")
        assert spec == "linA:2"
        assert meta["expected"]["tors"] == 5
        assert meta["family"] == "linear"

    def test_every_spec_parses(self):
        for _, spec, meta in Catalog().instances():
            assert meta["brick_finite"] is True
            parse_algebra(spec)

    def test_expected_counts_are_known_names(self):
        for _, _, meta in Catalog().instances():
            assert set(meta.get("expected", {})) <= set(COUNTABLE)

    def test_settings(self):
        catalog = Catalog()
        assert catalog.settings()["default_suite"] == "all"
        assert catalog.notes()

    def test_unknown(self):
        with pytest.raises(UnknownInstance):
            Catalog().get("no-such-algebra")


def test_resolve_reference():
    assert resolve_algebra("@linA3") == parse_algebra("linA:3")
    assert resolve_algebra("nakayama:cyclic:2,2") == parse_algebra("nakayama:cyclic:2,2")



def test_catalog_meta():
    assert catalog_meta("@linA4")["expected"]["wide"] == 42
    assert catalog_meta("linA:4") == {}


def test_custom_root(tmp_path):
    (tmp_path / "_settings.yaml").write_text("globals:\n  default_suite: T1\n")
    (tmp_path / "mine.yaml").write_text("family: linear\ninstances:\n  tiny:\n    spec: 'linA:1'\n")
    catalog = Catalog(str(tmp_path))
    assert catalog.settings() == {"default_suite": "T1"}
    assert catalog.get("tiny") == ("linA:1", {"family": "linear"})


def test_malformed_file(tmp_path):
    (tmp_path / "bad.yaml").write_text("instances: [unclosed\n")
    with pytest.raises(ConfigError):
        Catalog(str(tmp_path))
