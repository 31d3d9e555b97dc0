"""Per-particle random streams.

Each particle slot owns an independent counter-based (Philox) generator
spawned from one root seed, so a particle's draws do not depend on the order
in which the other particles are processed.  A separate control stream
serves ensemble-level randomness such as the single uniform of systematic
resampling.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np


def _philox(seed_seq: np.random.SeedSequence) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed_seq))


class ParticleStreams:
    """``n`` per-particle generators plus one control generator."""

    def __init__(self, generators: Sequence[np.random.Generator], control: np.random.Generator):
        self._gens = list(generators)
        self.control = control

    @classmethod
    def from_seed(cls, seed: int, n: int) -> "ParticleStreams":
        root = np.random.SeedSequence(seed)
        particle_root, control = root.spawn(2)
        gens = [_philox(s) for s in particle_root.spawn(n)]
        return cls(gens, _philox(control))

    def __len__(self) -> int:
        return len(self._gens)

    def permuted(self, perm) -> "ParticleStreams":
        """Streams reordered so that slot ``i`` uses old stream ``perm[i]``.

        The generator objects are shared, not copied.
        """
        return ParticleStreams([self._gens[i] for i in perm], self.control)

    def standard_normal(self, dim: int) -> np.ndarray:
        """One ``dim``-vector of standard normals from every stream, ``(n, dim)``."""
        if dim == 0:
            return np.zeros((len(self._gens), 0))
        return np.stack([g.standard_normal(dim) for g in self._gens])

    def uniform(self, dim: int) -> np.ndarray:
        return np.stack([g.random(dim) for g in self._gens])
