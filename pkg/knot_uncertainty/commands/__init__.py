import argparse
from typing import Callable, List, Optional

from knot_uncertainty.models.geometry import ParameterizationKind
from knot_uncertainty.models.reports import RunConfig, WeightPreset
from knot_uncertainty.services.report_service import OUTPUT_FORMATS
from knot_uncertainty.utils.constants import (
    DEFAULT_A,
    DEFAULT_FORMAT,
    DEFAULT_GAMMA,
    DEFAULT_HBAR,
    DEFAULT_KIND,
    DEFAULT_MODES,
    DEFAULT_P,
    DEFAULT_Q,
    DEFAULT_SEED,
    DEFAULT_WEIGHT,
)
from knot_uncertainty.utils.exceptions import InvalidInput


class Command:
    """A sub-command: name, extra arguments and the handler returning an exit code"""

    def __init__(self, name: str, help: str):
        self.name = name
        self.help = help
        self.arguments = []
        self.func: Optional[Callable] = None

    def argument(self, *args, **kwargs) -> 'Command':
        self.arguments.append((args, kwargs))
        return self

    def handler(self, func: Callable) -> Callable:
        self.func = func
        return func

    def attach(self, subparsers) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(self.name, help=self.help, parents=[common_parser()])
        for args, kwargs in self.arguments:
            parser.add_argument(*args, **kwargs)
        parser.set_defaults(handler=self.func)
        return parser


def common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--p', type=int, default=DEFAULT_P, help='knot winding p')
    parser.add_argument('--q', type=int, default=DEFAULT_Q, help='knot winding q')
    parser.add_argument('--gamma', type=float, default=DEFAULT_GAMMA, help='torus aspect ratio R/d')
    parser.add_argument('--a', type=float, default=DEFAULT_A, help='length scale')
    parser.add_argument('--hbar', type=float, default=DEFAULT_HBAR)
    parser.add_argument('--modes', default=','.join(str(n) for n in DEFAULT_MODES),
                        help='comma separated mode integers, equal weights')
    parser.add_argument('--kind', choices=[k.value for k in ParameterizationKind], default=DEFAULT_KIND)
    parser.add_argument('--weight', choices=[w.value for w in WeightPreset], default=DEFAULT_WEIGHT)
    parser.add_argument('--format', dest='output_format', choices=OUTPUT_FORMATS, default=DEFAULT_FORMAT)
    parser.add_argument('--seed', type=int, default=DEFAULT_SEED)
    parser.add_argument('--out', default=None, help='write to this path instead of stdout')
    parser.add_argument('--debug', action='store_true', help='verbose logging')
    return parser


def parse_int_list(text: str, label: str) -> List[int]:
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise InvalidInput(f"Malformed {label} list '{text}'; expected comma separated integers")


def parse_float_list(text: str, label: str) -> List[float]:
    try:
        return [float(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise InvalidInput(f"Malformed {label} list '{text}'; expected comma separated numbers")


def run_config_from_args(args) -> RunConfig:
    modes = parse_int_list(args.modes, 'modes')
    if not modes:
        raise InvalidInput("At least one mode is required")
    return RunConfig(
        p=args.p,
        q=args.q,
        gamma=args.gamma,
        a=args.a,
        hbar=args.hbar,
        modes=tuple(modes),
        kind=ParameterizationKind(args.kind),
        weight_preset=WeightPreset(args.weight),
        seed=args.seed,
        output_format=args.output_format,
        thin_commutator=getattr(args, 'thin_commutator', False),
    )


__all__ = ['Command', 'common_parser', 'parse_int_list', 'parse_float_list', 'run_config_from_args']
