"""
JSON and DOT serialization.

All output is sorted and byte-stable for fixed inputs: JSON goes through
`json.dumps(..., sort_keys=True)`, DOT nodes and edges are emitted in id
order.
"""

import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from .errors import ExportError, ExportOptionError
from .lattice_core import FinPoset, kappa_poset
from .observability import get_logger, log_event
from .subcat import TorsLattice

LOG = get_logger("export")

LABELS_NONE = "none"
LABELS_MU = "mu"
LABELS_BRICK = "brick"
LABEL_OPTIONS = (LABELS_NONE, LABELS_MU, LABELS_BRICK)

HASSE = "hasse"
KAPPA_POSET = "kappa-poset"


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


def tors_lattice_to_dict(tl: TorsLattice) -> Dict[str, Any]:
    arrows = sorted(tl.lattice.hasse_arrows(), key=lambda a: (a.dst, a.src))
    return {
        "algebra": str(tl.algebra),
        "kind": tl.kind,
        "classes": [c.to_list() for c in tl.classes],
        "covers": [[a.dst, a.src] for a in arrows],
        "mu_labels": [[a.dst, a.src, tl.mu_labels[a]] for a in arrows],
        "brick_labels": [[a.dst, a.src, tl.brick_labels[a].to_dict()] for a in arrows],
    }


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def _dot(name: str, nodes: List[str], edges: List[tuple]) -> str:
    lines = [f'digraph {name} {{', '\trankdir=BT;', '\tnode [shape=box];']
    for k, label in enumerate(nodes):
        lines.append(f'\tn{k} [label={_quote(label)}];')
    for src, dst, label in edges:
        attr = f' [label={_quote(label)}]' if label is not None else ''
        lines.append(f'\tn{src} -> n{dst}{attr};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def hasse_dot(tl: TorsLattice, labels: str = LABELS_NONE) -> str:
    """Nodes are classes, edges go from a class up to each cover."""
    if labels not in LABEL_OPTIONS:
        raise ExportOptionError(f'labels must be one of {LABEL_OPTIONS}, got {labels!r}')
    name = {LABELS_NONE: lambda a: None,
            LABELS_MU: lambda a: str(tl.classes[tl.mu_labels[a]]),
            LABELS_BRICK: lambda a: str(tl.brick_labels[a])}[labels]
    arrows = sorted(tl.lattice.hasse_arrows(), key=lambda a: (a.dst, a.src))
    return _dot(tl.kind, [str(c) for c in tl.classes], [(a.dst, a.src, name(a)) for a in arrows])


def kappa_poset_dot(tl: TorsLattice, labels: str = LABELS_NONE) -> str:
    """The kappa order on torsion classes with a canonical join representation. Edges carry no labels."""
    if labels != LABELS_NONE:
        raise ExportOptionError(f'kappa-poset edges are unlabelled, got labels={labels!r}')
    kp: FinPoset = kappa_poset(tl.lattice, tl.kappa)
    arrows = sorted(kp.hasse_arrows(), key=lambda a: (a.dst, a.src))
    return _dot("kappa", [str(tl.classes[x]) for x in kp.labels], [(a.dst, a.src, None) for a in arrows])


EXPORTERS: Dict[str, Callable[..., str]] = {
    HASSE: hasse_dot,
    KAPPA_POSET: kappa_poset_dot,
}


def write_text(path: Optional[str], text: str) -> None:
    """Write to `path`, or stdout when path is None or '-'."""
    if path in (None, "-"):
        print(text, end="")
        return
    try:
        Path(path).write_text(text)
    except OSError as e:
        raise ExportError(f"Cannot write {path}: {e}") from e
    log_event(LOG, "export_written", path=str(path), bytes=len(text))
