"""
Deterministic random generation utilities.
"""
from .random import philox, gen_mask, synth_lowrank

__all__ = ["philox", "gen_mask", "synth_lowrank"]
