import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

# Source checkouts: make the src/ packages importable
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from analysis.spectrum import DeltaSpectrum, delta_spectrum, delta_spectrum_orbit, r_m
from analysis.verify import DEFAULT_CAP
from core.batch import BatchVerifier
from core.distances import wiener
from core.exceptions import (CapExceededError, DisconnectedGraphError, MetadataError,
                             SelectorError, WienerError)
from core.manager import FamilyManager, setup_families
from family.hgraph import HGraph, hgraph_from_roles
from search.realize import verify_hit
from search.sweep import sweep
from utils.edgelist import format_edge_list, read_edge_list
from utils.expected import load_expected
from utils.format_utils import format_rows, render_decimal, render_fraction, write_text

logger = logging.getLogger('cli')


@dataclass
class RunConfig:
    """Everything one CLI run needs, validated once."""
    command: str
    selector: Optional[str] = None
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None
    fmt: str = 'csv'
    cap: int = DEFAULT_CAP
    threads: int = 1
    quiet: bool = False
    verbosity: int = 0
    orbit: bool = False
    selectors: List[str] = field(default_factory=list)
    verify_all: bool = False
    fixture: Optional[Path] = None
    m: int = 0
    n_range: Sequence[int] = range(5, 131)
    k_range: Sequence[int] = range(2, 12)
    n0_range: Sequence[int] = range(1, 21)
    l_values: List[int] = field(default_factory=lambda: [1])
    verify_hits: bool = False
    realized_only: bool = False

    def validate(self) -> None:
        if self.command in ('wiener', 'spectrum') and (self.selector is None) == (self.input_path is None):
            raise SelectorError("Give exactly one input: a family selector or --input FILE")
        if self.command == 'construct' and not self.selector:
            raise SelectorError("construct needs a family selector")
        if self.command == 'verify' and not (self.verify_all or self.selectors):
            raise SelectorError("verify needs --all or at least one selector")
        if self.cap < 1:
            raise ValueError(f"--cap must be >= 1, got {self.cap}")
        if self.threads < 1:
            raise ValueError(f"--threads must be >= 1, got {self.threads}")
        if self.fmt not in ('csv', 'table'):
            raise ValueError(f"Unknown format {self.fmt!r}")
        if any(l < 1 for l in self.l_values):
            raise ValueError("--l values must be >= 1")


def parse_range(text: str) -> range:
    """``LO..HI`` (inclusive) or a single integer."""
    try:
        if '..' in text:
            lo, hi = text.split('..', 1)
            return range(int(lo), int(hi) + 1)
        value = int(text)
        return range(value, value + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI or an integer, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Wiener index toolkit for vertex-deletion invariant graph families',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="Selectors: prop2:m=N[,s=S]  prop2matching:m=N  prop3:k=N[,s=S]  prop4:k=N\n"
               "           example497  example497-joined  h:n=N,k=K,f=GADGET\n"
               "Gadgets:   empty/L  matching/L  starpath/K  starcycle/K  p3  broom/A/B/leaf|center",
    )
    parser.add_argument('--threads', '-t', type=int, default=1, help='Worker threads for the BFS backend')
    parser.add_argument('--quiet', '-q', action='store_true', help='Suppress progress bars')
    parser.add_argument('--verbose', '-v', action='count', default=0, help='More log output (repeatable)')
    subparsers = parser.add_subparsers(dest='command', help='Command to execute')

    def add_output(sub):
        sub.add_argument('--output', '-o', help='Output file path (default: stdout)')
        sub.add_argument('--format', '-f', choices=('csv', 'table'), default='csv', dest='fmt')

    construct = subparsers.add_parser('construct', help='Write the edge list of a family member')
    construct.add_argument('selector', help='Family selector')
    construct.add_argument('--output', '-o', help='Output file path (default: stdout)')

    for name, help_text in (('wiener', 'Print the Wiener index'), ('spectrum', 'Print the Δ_v spectrum')):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument('selector', nargs='?', help='Family selector')
        sub.add_argument('--input', '-i', help='Edge-list file')
        if name == 'spectrum':
            sub.add_argument('--orbit', action='store_true', help='Use orbit representatives (H graphs only)')
            add_output(sub)

    verify = subparsers.add_parser('verify', help='Check closed forms and published values')
    verify.add_argument('selectors', nargs='*', help='Family selectors')
    verify.add_argument('--all', action='store_true', dest='verify_all', help='Every published row and corollary')
    verify.add_argument('--cap', type=int, default=DEFAULT_CAP, help='Largest order verified by brute force')
    verify.add_argument('--fixture', help='Expected-values CSV (default: bundled tables)')
    add_output(verify)

    search = subparsers.add_parser('search', help='Sweep (n, k, n0) for tuples with Δ_v = m')
    search.add_argument('--m', type=int, default=0, help='Target Δ_v')
    search.add_argument('--n', type=parse_range, default=range(5, 131), dest='n_range')
    search.add_argument('--k', type=parse_range, default=range(2, 12), dest='k_range')
    search.add_argument('--n0', type=parse_range, default=range(1, 21), dest='n0_range')
    search.add_argument('--l', type=int, action='append', dest='l_values',
                        help='Attachments per position (repeatable, default 1)')
    search.add_argument('--verify', action='store_true', dest='verify_hits', help='Verify realized hits')
    search.add_argument('--realized-only', action='store_true', help='Only print realized hits')
    search.add_argument('--cap', type=int, default=DEFAULT_CAP, help='Largest order verified by brute force')
    add_output(search)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = {key: value for key, value in vars(args).items() if value is not None}
    config = RunConfig(
        command=values['command'],
        selector=values.get('selector'),
        input_path=Path(values['input']) if 'input' in values else None,
        output_path=Path(values['output']) if 'output' in values else None,
        fmt=values.get('fmt', 'csv'),
        cap=values.get('cap', DEFAULT_CAP),
        threads=values['threads'],
        quiet=values['quiet'],
        verbosity=values['verbose'],
        orbit=values.get('orbit', False),
        selectors=values.get('selectors', []),
        verify_all=values.get('verify_all', False),
        fixture=Path(values['fixture']) if 'fixture' in values else None,
        m=values.get('m', 0),
        n_range=values.get('n_range', range(5, 131)),
        k_range=values.get('k_range', range(2, 12)),
        n0_range=values.get('n0_range', range(1, 21)),
        l_values=values.get('l_values') or [1],
        verify_hits=values.get('verify_hits', False),
        realized_only=values.get('realized_only', False),
    )
    config.validate()
    return config


def emit(config: RunConfig, text: str) -> None:
    if config.output_path:
        write_text(config.output_path, text)
        logger.info("Wrote %s", config.output_path)
    else:
        sys.stdout.write(text)


def load_input(config: RunConfig, manager: FamilyManager, need_roles: bool = False):
    """A Graph from a file, or an HGraph for selectors and for files read with need_roles."""
    if config.selector:
        return manager.construct(config.selector)
    document = read_edge_list(config.input_path)
    if not need_roles:
        return document.graph
    if not document.cycle_ids:
        raise MetadataError(f"{config.input_path} has no cycle role lines; --orbit needs an H graph")
    return hgraph_from_roles(document.graph, document.cycle_ids)


def cmd_construct(config: RunConfig, manager: FamilyManager) -> int:
    h = manager.construct(config.selector)
    p = h.params
    comments = [f"{config.selector} {h.label()}", f"gadget {p.gadget.label}"]
    emit(config, format_edge_list(h.graph, h.cycle_vertices, comments))
    return 0


def cmd_wiener(config: RunConfig, manager: FamilyManager) -> int:
    loaded = load_input(config, manager)
    graph = loaded.graph if isinstance(loaded, HGraph) else loaded
    print(wiener(graph, threads=config.threads))
    return 0


def spectrum_rows(spectrum: DeltaSpectrum) -> List[list]:
    return [[m, count, render_fraction(r_m(spectrum, m)), render_decimal(r_m(spectrum, m))]
            for m, count in spectrum.items()]


def cmd_delta_spectrum(config: RunConfig, manager: FamilyManager) -> int:
    loaded = load_input(config, manager, need_roles=config.orbit)
    progress = not config.quiet
    if config.orbit:
        spectrum = delta_spectrum_orbit(loaded, threads=config.threads, progress=progress)
    else:
        graph = loaded.graph if isinstance(loaded, HGraph) else loaded
        spectrum = delta_spectrum(graph, threads=config.threads, progress=progress)
    text = format_rows(['m', 'count', 'ratio', 'ratio_display'], spectrum_rows(spectrum), config.fmt)
    text += f"# disconnecting {spectrum.disconnecting} of {spectrum.order}\n"
    emit(config, text)
    return 0


def report_rows(entries) -> List[list]:
    rows = []
    for status, entry in entries:
        report = entry.report
        if report is None:
            rows.append([entry.name, status, '', '', '', '', '', entry.message])
            continue
        ratio = report.ratio
        rows.append([
            entry.name, status, report.order, report.wiener,
            '' if report.delta_bfs is None else report.delta_bfs,
            '' if ratio is None else render_fraction(ratio),
            '' if ratio is None else render_decimal(ratio),
            '; '.join(c.describe() for c in report.failures()),
        ])
    return rows


def cmd_verify(config: RunConfig, manager: FamilyManager) -> int:
    expected = load_expected(config.fixture) if config.fixture else None
    verifier = BatchVerifier(manager, cap=config.cap, threads=config.threads,
                             progress=not config.quiet, expected=expected)
    results = verifier.verify_all() if config.verify_all else verifier.batch_verify(config.selectors)
    for entry in results['skipped']:
        print(f"Skipped {entry.name}: {entry.message}", file=sys.stderr)
    entries = sorted(
        [('pass', e) for e in results['successful']] + [('FAIL', e) for e in results['failed']]
        + [('skip', e) for e in results['skipped']],
        key=lambda item: item[1].position,
    )
    header = ['target', 'status', 'order', 'wiener', 'm', 'ratio', 'ratio_display', 'failures']
    emit(config, format_rows(header, report_rows(entries), config.fmt))
    print(f"Verified {len(results['successful'])} passed, {len(results['failed'])} failed, "
          f"{len(results['skipped'])} skipped", file=sys.stderr)
    return 1 if results['failed'] else 0


def cmd_search(config: RunConfig, manager: FamilyManager) -> int:
    hits = []
    for l in config.l_values:
        hits.extend(sweep(config.m, config.n_range, config.k_range, config.n0_range,
                          l=l, threads=config.threads))
    hits.sort(key=lambda hit: hit.sort_key())
    if config.realized_only:
        hits = [hit for hit in hits if hit.realized]

    header = ['n', 'k', 'n0', 't0', 'm', 'bound_num', 'bound_den', 'realized', 'order', 'l']
    if config.verify_hits:
        header.append('verified')
    failed = 0
    rows = []
    for hit in hits:
        row = [hit.n, hit.k, hit.n0, hit.t0, hit.m, hit.bound.numerator, hit.bound.denominator,
               hit.realization.label if hit.realized else '', hit.order, hit.l]
        if config.verify_hits:
            status = ''
            if hit.realized:
                try:
                    report = verify_hit(hit, cap=config.cap, threads=config.threads)
                    status = 'pass' if report.passed else 'FAIL'
                    failed += not report.passed
                except CapExceededError:
                    status = 'skip'
            row.append(status)
        rows.append(row)
    emit(config, format_rows(header, rows, config.fmt))
    return 1 if failed else 0


HANDLERS = {
    'construct': cmd_construct,
    'wiener': cmd_wiener,
    'spectrum': cmd_delta_spectrum,
    'verify': cmd_verify,
    'search': cmd_search,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point for the command-line interface."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return 1

    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)],
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )
    manager = setup_families()
    try:
        config = config_from_args(args)
        return HANDLERS[config.command](config, manager)
    except FileNotFoundError as e:
        print(f"Error: {str(e)}", file=sys.stderr)
        return 1
    except SelectorError as e:
        print(f"Error: {str(e)}", file=sys.stderr)
        print("\nTip: run with --help to see the selector grammar", file=sys.stderr)
        return 1
    except DisconnectedGraphError as e:
        print(f"Error: {str(e)}", file=sys.stderr)
        return 1
    except WienerError as e:
        print(f"Error: {str(e)}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"Invalid argument: {str(e)}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
