import glob
import os
from pathlib import Path
from typing import Any, Dict, Iterator, Tuple

import yaml

from .errors import ConfigError, UnknownInstance
from .nakayama import AlgebraSpec, parse_algebra

CATALOG_REF = "@"


class Catalog:
    """
    Named algebra instances: `_settings.yaml` plus every other `*.yaml` under
    `root`, each listing `instances: {name: {spec, brick_finite, expected}}`.
    """

    def __init__(self, root: str = "instances"):
        self.root = self._locate(root)
        self._settings = self._load_yaml(os.path.join(self.root, "_settings.yaml"))
        self.docs = self._load_all()

    @staticmethod
    def _locate(root: str) -> str:
        if os.path.isdir(root) or os.path.isabs(root):
            return root
        # fall back to the checkout the package lives in
        return str(Path(__file__).resolve().parent.parent / root)

    def _load_yaml(self, p: str) -> Dict[str, Any]:
        try:
            with open(p, "r") as f:
                return yaml.safe_load(f) or {}
        except FileNotFoundError:
            return {}
        except yaml.YAMLError as e:
            raise ConfigError(f"Malformed catalog file {p}: {e}") from e

    def _load_all(self):
        docs = []
        for p in sorted(glob.glob(os.path.join(self.root, "*.yaml"))):
            if p.endswith("_settings.yaml"):
                continue
            docs.append(self._load_yaml(p))
        return docs

    def settings(self) -> Dict[str, Any]:
        return self._settings.get("globals") or {}

    def notes(self):
        return list(self.settings().get("report_notes") or [])

    def instances(self) -> Iterator[Tuple[str, str, Dict[str, Any]]]:
        for doc in self.docs:
            family = doc.get("family")
            for name, entry in (doc.get("instances") or {}).items():
                if not isinstance(entry, dict) or "spec" not in entry:
                    continue
                meta = {k: v for k, v in entry.items() if k != "spec"}
                meta.setdefault("family", family)
                yield name, entry["spec"], meta

    def get(self, name: str) -> Tuple[str, Dict[str, Any]]:
        for found, spec, meta in self.instances():
            if found == name:
                return spec, meta
        raise UnknownInstance(f"No catalog instance named {name!r} under {self.root}")


def catalog_meta(text: str, catalog_root: str = "instances") -> Dict[str, Any]:
    """Catalog metadata for an `@name` reference, empty for a plain algebra string."""
    if not text.startswith(CATALOG_REF):
        return {}
    _, meta = Catalog(catalog_root).get(text[len(CATALOG_REF):])
    return meta


def resolve_algebra(text: str, catalog_root: str = "instances", cyclic_bound: int = 2) -> AlgebraSpec:
    """Parse a spec string, or look up `@name` in the catalog first."""
    if text.startswith(CATALOG_REF):
        text, _ = Catalog(catalog_root).get(text[len(CATALOG_REF):])
    return parse_algebra(text, cyclic_bound)
