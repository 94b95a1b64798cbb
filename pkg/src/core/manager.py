import logging
import re
from typing import Callable, Dict, List, Optional, Tuple

from core.exceptions import GadgetError, SelectorError
from family.hgraph import HGraph, HParams, build_H
from family import named
from gadgets import (BaseGadget, BroomGadget, EmptyGadget, PathCenter3Gadget,
                     PerfectMatchingGadget, StarCycleGadget, StarPathGadget)

logger = logging.getLogger(__name__)

FamilyFactory = Callable[[Dict[str, str]], HParams]

_SELECTOR = re.compile(r'^(?P<name>[a-z][a-z0-9-]*)(?::(?P<options>.*))?$')


def parse_gadget(text: str) -> BaseGadget:
    """
    Parse a gadget description: ``empty/L``, ``matching/L``, ``starpath/K``,
    ``starcycle/K``, ``p3`` or ``broom/LEAVES/PATH/leaf|center``.
    """
    parts = text.strip().lower().split('/')
    kind, args = parts[0], parts[1:]
    try:
        if kind == 'p3' and not args:
            return PathCenter3Gadget()
        if kind == 'broom' and len(args) == 3 and args[2] in ('leaf', 'center'):
            return BroomGadget(int(args[0]), int(args[1]), from_leaf=args[2] == 'leaf')
        simple = {
            'empty': EmptyGadget,
            'matching': PerfectMatchingGadget,
            'starpath': StarPathGadget,
            'starcycle': StarCycleGadget,
        }
        if kind in simple and len(args) == 1:
            return simple[kind](int(args[0]))
    except ValueError:
        raise SelectorError(f"Non-integer gadget argument in {text!r}")
    except GadgetError as e:
        raise SelectorError(str(e))
    raise SelectorError(f"Unknown gadget {text!r}")


def _int_option(options: Dict[str, str], key: str, default: Optional[int] = None) -> Optional[int]:
    if key not in options:
        return default
    try:
        return int(options[key])
    except ValueError:
        raise SelectorError(f"Option {key}={options[key]!r} is not an integer")


class FamilyManager:
    """
    Resolves family selectors to H parameters and built graphs.
    """

    def __init__(self):
        self._families: Dict[str, FamilyFactory] = {}
        self._allowed: Dict[str, Tuple[str, ...]] = {}

    def register_family(self, name: str, factory: FamilyFactory, options: Tuple[str, ...] = ()) -> None:
        """
        Register a family under a selector name.
        """
        self._families[name] = factory
        self._allowed[name] = options

    @property
    def families(self) -> List[str]:
        return sorted(self._families)

    def parse(self, selector: str) -> Tuple[str, Dict[str, str]]:
        """
        Split ``name:key=value,key=value`` into the name and its options.

        Raises:
            SelectorError: on bad grammar, an unknown family or option
        """
        match = _SELECTOR.match(selector.strip())
        if not match:
            raise SelectorError(f"Invalid selector {selector!r}")
        name = match.group('name')
        if name not in self._families:
            raise SelectorError(
                f"Unknown family {name!r}; expected one of {', '.join(self.families)}"
            )
        options: Dict[str, str] = {}
        raw = match.group('options')
        if raw:
            for item in raw.split(','):
                key, sep, value = item.partition('=')
                key = key.strip()
                if not sep or not key:
                    raise SelectorError(f"Expected key=value in selector {selector!r}, got {item!r}")
                if key not in self._allowed[name]:
                    raise SelectorError(f"Family {name!r} has no option {key!r}")
                if key in options:
                    raise SelectorError(f"Option {key!r} given twice in {selector!r}")
                options[key] = value.strip()
        return name, options

    def resolve(self, selector: str) -> HParams:
        """
        Raises:
            SelectorError: on bad grammar
            FamilyParameterError: on parameter precondition violations
        """
        name, options = self.parse(selector)
        params = self._families[name](options)
        logger.debug("Resolved %s to %s", selector, params.gadget.label)
        return params

    def construct(self, selector: str) -> HGraph:
        return build_H(self.resolve(selector))


def _named(family: str, key: Optional[str]) -> FamilyFactory:
    def factory(options: Dict[str, str]) -> HParams:
        parameter = _int_option(options, key) if key else None
        if key and parameter is None:
            raise SelectorError(f"Family {family!r} needs option {key}=N")
        return named.named_family(family, parameter, _int_option(options, 's', 0))
    return factory


def _custom(options: Dict[str, str]) -> HParams:
    for key in ('n', 'k', 'f'):
        if key not in options:
            raise SelectorError(f"Family 'h' needs option {key}=...")
    return HParams(_int_option(options, 'n'), _int_option(options, 'k'), parse_gadget(options['f']))


def setup_families() -> FamilyManager:
    manager = FamilyManager()
    manager.register_family('prop2', _named('prop2', 'm'), ('m', 's'))
    manager.register_family('prop2matching', _named('prop2matching', 'm'), ('m',))
    manager.register_family('prop3', _named('prop3', 'k'), ('k', 's'))
    manager.register_family('prop4', _named('prop4', 'k'), ('k',))
    manager.register_family('example497', _named('example497', None))
    manager.register_family('example497-joined', _named('example497-joined', None))
    manager.register_family('h', _custom, ('n', 'k', 'f'))
    return manager
