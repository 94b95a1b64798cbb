"""
Attachment gadgets F for the H(n, k, l, n0, t0) construction.
"""
from .base import BaseGadget, first_pairs
from .empty import EmptyGadget, EmptyPlusEdgesGadget, PerfectMatchingGadget
from .broom import BroomGadget, StarPathGadget, PathCenter3Gadget
from .star_cycle import StarCycleGadget
from .custom import CustomGadget, AugmentedGadget

__all__ = [
    'BaseGadget', 'first_pairs',
    'EmptyGadget', 'EmptyPlusEdgesGadget', 'PerfectMatchingGadget',
    'BroomGadget', 'StarPathGadget', 'PathCenter3Gadget',
    'StarCycleGadget', 'CustomGadget', 'AugmentedGadget',
]
