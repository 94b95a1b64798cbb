import logging
from typing import Optional

from core.exceptions import FamilyParameterError
from family.hgraph import HParams
from gadgets import (EmptyGadget, EmptyPlusEdgesGadget, PathCenter3Gadget,
                     PerfectMatchingGadget, StarCycleGadget, StarPathGadget,
                     first_pairs)

logger = logging.getLogger(__name__)

FAMILIES = ('prop2', 'prop2matching', 'prop3', 'prop4', 'example497', 'example497-joined')


def prop2(m: int, inserted_edges: int = 0) -> HParams:
    if m < 0:
        raise FamilyParameterError(f"prop2 needs m >= 0, got {m}")
    l = m + 5
    gadget = EmptyGadget(l)
    if inserted_edges:
        gadget = EmptyPlusEdgesGadget(l, first_pairs(inserted_edges, range(l)))
    return HParams(16 * m + 95, m + 6, gadget)


def prop2_matching(m: int) -> HParams:
    if m < 1 or m % 2 == 0:
        raise FamilyParameterError(f"prop2matching needs an odd m >= 1, got {m}")
    return HParams(16 * m + 95, m + 6, PerfectMatchingGadget(m + 5))


def prop3(k: int, inserted_edges: int = 0) -> HParams:
    if k < 2:
        raise FamilyParameterError(f"prop3 needs k >= 2, got {k}")
    gadget = StarPathGadget(k)
    if inserted_edges:
        gadget = gadget.with_edges(first_pairs(inserted_edges, gadget.pendant_leaves()))
    return HParams(2 * k + 24, k, gadget)


def prop4(k: int) -> HParams:
    if k < 4 or k % 3 != 1:
        raise FamilyParameterError(f"prop4 needs k >= 4 with k = 1 (mod 3), got {k}")
    return HParams((4 * k + 59) // 3, k, StarCycleGadget(k))


def example497(joined: bool = False) -> HParams:
    gadget = PathCenter3Gadget()
    if joined:
        gadget = gadget.with_edges([tuple(gadget.pendant_leaves())])
    return HParams(71, 4, gadget)


def named_family(family: str, parameter: Optional[int] = None, inserted_edges: int = 0) -> HParams:
    """
    The exact H of a named family.

    Raises:
        FamilyParameterError: on an unknown family, a missing parameter or a
            parity/divisibility violation
    """
    if family not in FAMILIES:
        raise FamilyParameterError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if family.startswith('example497'):
        if parameter is not None:
            raise FamilyParameterError(f"{family} takes no parameter")
        if inserted_edges:
            raise FamilyParameterError(f"{family} does not support inserted edges")
        return example497(joined=family.endswith('joined'))
    if parameter is None:
        raise FamilyParameterError(f"{family} needs a parameter")
    if family == 'prop2':
        return prop2(parameter, inserted_edges)
    if family == 'prop3':
        return prop3(parameter, inserted_edges)
    if inserted_edges:
        raise FamilyParameterError(f"{family} does not support inserted edges")
    if family == 'prop2matching':
        return prop2_matching(parameter)
    return prop4(parameter)
