from enum import Enum


class Tier(str, Enum):
    """Model hierarchy for the pulse steps (i) and (vii)."""
    T0 = "T0"  # two-level W-state transfer
    T1 = "T1"  # full Dicke ladder with dispersive blockade
    T2 = "T2"  # lab-frame Jaynes-Cummings plus drive, sampled in time
