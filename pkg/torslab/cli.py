#!/usr/bin/env python3
"""
CLI for the torsion-class workbench
Enumerates structures, runs the verification suite and exports lattices
"""

import argparse
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from .catalog import Catalog, catalog_meta, resolve_algebra
from .config import SUPPORTED_FIELDS, WorkbenchConfig, get_config
from .errors import TorslabError
from .export import EXPORTERS, HASSE, LABEL_OPTIONS, LABELS_NONE, dumps, tors_lattice_to_dict, write_text
from .nakayama import hom_dim, projective
from .observability import get_logger, log_event, set_log_level
from .subcat import TORF, TORS
from .verify import ALL, FAIL, suite_report
from .verify.context import Instance

LOG = get_logger("cli")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1

LATTICE_JSON = "lattice"

KIND_SBRICK = "sbrick"
KIND_MBRICK = "mbrick"
KIND_MBRICK_CC = "mbrick-cc"
KIND_BRICKS = "bricks"

# enumerate --kind -> how to pull the list off an Instance and serialize one item
ENUMERATIONS: Dict[str, Callable[[Instance], List[Any]]] = {
    TORS: lambda ctx: [c.to_list() for c in ctx.tors],
    TORF: lambda ctx: [c.to_list() for c in ctx.torf],
    "wide": lambda ctx: [c.to_list() for c in ctx.wide],
    KIND_SBRICK: lambda ctx: [s.to_dict() for s in ctx.semibricks],
    KIND_MBRICK: lambda ctx: [s.to_dict() for s in ctx.monobricks],
    KIND_MBRICK_CC: lambda ctx: [s.to_dict() for s in ctx.cc_monobricks],
    KIND_BRICKS: lambda ctx: [b.to_dict() for b in ctx.bricks],
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--algebra', required=True,
                        help='linA:<n>, nakayama:<linear|cyclic>:<c1,...,cn> or @<catalog name>')
    common.add_argument('--seed', type=int, help='Seed for sampled join representations (default: 0)')
    common.add_argument('--jobs', type=int, help='Worker processes for enumeration (default: 1)')
    common.add_argument('--field', type=int, choices=SUPPORTED_FIELDS, help='Oracle field characteristic')
    common.add_argument('--max-indecs', type=int, help='Brute-force enumeration cap')
    common.add_argument('--max-ext-classes', type=int, help='Extension class enumeration cap')

    parser = argparse.ArgumentParser(prog='torslab', description='Torsion classes, wide subcategories and '
                                                                 'semibricks of Nakayama algebras')
    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    enum_parser = subparsers.add_parser('enumerate', parents=[common], help='Enumerate a family of structures')
    enum_parser.add_argument('--kind', choices=list(ENUMERATIONS), required=True, help='What to enumerate')
    enum_parser.add_argument('--format', choices=['json', 'count'], default='json', help='Output format')
    enum_parser.add_argument('--out', help='Output file (default: stdout)')

    verify_parser = subparsers.add_parser('verify', parents=[common], help='Run the verification suite')
    verify_parser.add_argument('--suite', help='all, or a comma list of check ids (default from catalog settings)')
    verify_parser.add_argument('--out', help='Report file (default: stdout)')

    export_parser = subparsers.add_parser('export', parents=[common], help='Export a lattice as DOT or JSON')
    export_parser.add_argument('--what', choices=[*EXPORTERS, LATTICE_JSON], default=HASSE, help='What to export')
    export_parser.add_argument('--kind', choices=[TORS, TORF], default=TORS, help='Torsion or torsion-free side')
    export_parser.add_argument('--labels', choices=LABEL_OPTIONS, default=LABELS_NONE, help='Edge labels (hasse only)')
    export_parser.add_argument('--out', help='Output file (default: stdout)')

    info_parser = subparsers.add_parser('info', parents=[common], help='Summarize an algebra')
    info_parser.add_argument('--out', help='Output file (default: stdout)')

    subparsers.add_parser('instances', help='List catalog instances')
    return parser


def _config(args) -> WorkbenchConfig:
    """Environment config with CLI flags applied on top"""
    return get_config().with_overrides(
        seed=getattr(args, 'seed', None),
        jobs=getattr(args, 'jobs', None),
        field=getattr(args, 'field', None),
        max_indecs=getattr(args, 'max_indecs', None),
        max_ext_classes=getattr(args, 'max_ext_classes', None),
    )


def _instance(args) -> Instance:
    config = _config(args)
    a = resolve_algebra(args.algebra, config.catalog_dir, config.cyclic_bound)
    return Instance(a, config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point; returns the process exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 2

    try:
        set_log_level(get_config().log_level)
        if args.command == 'enumerate':
            return handle_enumerate_command(args)
        elif args.command == 'verify':
            return handle_verify_command(args)
        elif args.command == 'export':
            return handle_export_command(args)
        elif args.command == 'info':
            return handle_info_command(args)
        elif args.command == 'instances':
            return handle_instances_command(args)
        parser.print_help()
        return 2
    except TorslabError as e:
        log_event(LOG, 'command_failed', command=args.command, error=type(e).__name__)
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code


def handle_enumerate_command(args) -> int:
    """Handle the enumerate command"""
    ctx = _instance(args)
    items = ENUMERATIONS[args.kind](ctx)
    if args.format == 'count':
        write_text(args.out, f"{len(items)}\n")
    else:
        write_text(args.out, dumps(items) + "\n")
    return EXIT_OK


def handle_verify_command(args) -> int:
    """Handle the verify command; exit 1 when any check fails or a catalog count is off"""
    ctx = _instance(args)
    catalog = Catalog(ctx.config.catalog_dir)
    suite = args.suite or catalog.settings().get('default_suite', ALL)
    meta = catalog_meta(args.algebra, ctx.config.catalog_dir)
    doc = suite_report(ctx.algebra, suite, ctx.config, notes=catalog.notes(),
                       expected=meta.get('expected'), brick_finite=meta.get('brick_finite', True))
    write_text(args.out, dumps(doc) + "\n")
    return EXIT_CHECK_FAILED if doc['summary'][FAIL] else EXIT_OK


def handle_export_command(args) -> int:
    """Handle the export command"""
    ctx = _instance(args)
    tl = ctx.tors_lattice if args.kind == TORS else ctx.torf_lattice
    if args.what == LATTICE_JSON:
        text = dumps(tors_lattice_to_dict(tl)) + "\n"
    else:
        text = EXPORTERS[args.what](tl, args.labels)
    write_text(args.out, text)
    return EXIT_OK


def handle_info_command(args) -> int:
    """Handle the info command"""
    ctx = _instance(args)
    a = ctx.algebra
    indecs = ctx.indecs
    info = {
        "algebra": str(a),
        "shape": a.shape,
        "kupisch": list(a.kupisch),
        "indecomposables": [m.to_dict() for m in indecs],
        "projectives": [projective(a, i).to_dict() for i in range(1, a.n + 1)],
        "bricks": [b.to_dict() for b in ctx.bricks],
        "hom_table": [[hom_dim(a, m, x) for x in indecs] for m in indecs],
    }
    write_text(args.out, dumps(info) + "\n")
    return EXIT_OK


def handle_instances_command(args) -> int:
    """Handle the instances command"""
    catalog = Catalog(get_config().catalog_dir)
    rows = [dict(meta, name=name, spec=spec) for name, spec, meta in catalog.instances()]
    write_text(None, dumps(rows) + "\n")
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
