import typing as t
from pydantic import BaseModel, ConfigDict, Field

LEVELS = 3


class SpaceDescriptor(BaseModel):
    """
    Truncated Hilbert space of `n_systems` qutrits and one cavity mode.

    Basis ordering is row-major: qutrit digits are the most significant positions
    (system 0 first), the photon number is the least significant one.
    Systems 0..n_systems-2 are the controls, system n_systems-1 is the target.
    """
    model_config = ConfigDict(frozen=True)

    n_systems: int = Field(ge=1)
    photon_cutoff: int = Field(ge=2)
    levels: t.Literal[3] = LEVELS

    @property
    def dim(self) -> int:
        return self.levels ** self.n_systems * self.photon_cutoff

    @property
    def qutrit_dim(self) -> int:
        return self.levels ** self.n_systems

    @property
    def controls(self) -> tuple[int, ...]:
        return tuple(range(self.n_systems - 1))

    @property
    def target(self) -> int:
        return self.n_systems - 1

    def index(self, digits: t.Sequence[int], photons: int) -> int:
        if len(digits) != self.n_systems:
            raise ValueError(f"Expected {self.n_systems} digits, got {len(digits)}: {tuple(digits)}")
        if any(d not in (0, 1, 2) for d in digits):
            raise ValueError(f"Qutrit digits must be in {{0, 1, 2}}, got {tuple(digits)}")
        if not 0 <= photons < self.photon_cutoff:
            raise ValueError(f"Photon number {photons} outside [0, {self.photon_cutoff})")

        qutrit_index = 0
        for d in digits:
            qutrit_index = qutrit_index * self.levels + d
        return qutrit_index * self.photon_cutoff + photons

    def decode(self, index: int) -> tuple[tuple[int, ...], int]:
        if not 0 <= index < self.dim:
            raise ValueError(f"Basis index {index} outside [0, {self.dim})")

        qutrit_index, photons = divmod(index, self.photon_cutoff)
        digits = []
        for _ in range(self.n_systems):
            qutrit_index, d = divmod(qutrit_index, self.levels)
            digits.append(d)
        return tuple(reversed(digits)), photons

    def label(self, index: int) -> str:
        """Basis label used in reports, e.g. `111|0|0c`."""
        digits, photons = self.decode(index)
        controls = "".join(str(d) for d in digits[:-1])
        return f"{controls}|{digits[-1]}|{photons}c"
