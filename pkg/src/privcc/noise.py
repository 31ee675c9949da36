"""Key-derived Laplace noise streams.

Every draw is a pure function of (master seed, domain tag, index), so runs
replay exactly, draw values are independent of iteration order and thread
count, and adjacent-graph runs can share noise by sharing the seed.  The
key is reduced to a 64-bit word by a chained splitmix64-style mixer and the
draw comes from inverse-CDF sampling on an open-interval uniform.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

TAG_DEGREE = "degree"
TAG_LIGHT = "light"
TAG_AGREEMENT = "agreement"
TAG_SAMPLE = "sample"

_TAG_CODES = {TAG_DEGREE: 0x9E3779B97F4A7C15,
              TAG_LIGHT: 0xC2B2AE3D27D4EB4F,
              TAG_AGREEMENT: 0x165667B19E3779F9,
              TAG_SAMPLE: 0x27D4EB2F165667C5}

_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)


def _mix64(x: np.ndarray) -> np.ndarray:
    """splitmix64 finalizer, vectorized over uint64 arrays."""
    x = x.astype(np.uint64, copy=True)
    x ^= x >> np.uint64(30)
    x *= _M1
    x ^= x >> np.uint64(27)
    x *= _M2
    x ^= x >> np.uint64(31)
    return x


def _key_words(seed: int, tag: str, i: np.ndarray, j: np.ndarray) -> np.ndarray:
    """Collapse (seed, tag, i, j) into one well-mixed 64-bit word each."""
    if tag not in _TAG_CODES:
        raise ValueError(f"unknown noise domain tag {tag!r}")
    shape = np.broadcast(i, j).shape
    h = np.full(shape, (seed + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF,
                dtype=np.uint64)
    h = _mix64(h)
    h = _mix64(h ^ np.uint64(_TAG_CODES[tag]))
    h = _mix64(h ^ i.astype(np.uint64))
    h = _mix64(h ^ (j.astype(np.uint64) * _GOLDEN))
    return h


def _uniform_open(words: np.ndarray) -> np.ndarray:
    """Map uint64 words to uniforms in the open interval (0, 1)."""
    return ((words >> np.uint64(11)).astype(np.float64) + 0.5) / 2.0**53


@dataclass(frozen=True)
class NoiseKey:
    """Address of a single draw: master seed, domain tag, and index.

    The index is a vertex id, an unordered vertex pair, or a (level, vertex)
    pair; pairs are canonicalized so both orientations hit the same stream.
    """
    seed: int
    tag: str
    index: tuple

    def words(self) -> tuple[int, int]:
        idx = self.index if isinstance(self.index, tuple) else (self.index,)
        if len(idx) == 1:
            i, j = int(idx[0]), 0
        elif len(idx) == 2:
            i, j = int(idx[0]), int(idx[1])
            if self.tag == TAG_AGREEMENT:
                i, j = min(i, j), max(i, j)
        else:
            raise ValueError("index must have one or two components")
        return i, j


def uniform(key: NoiseKey) -> float:
    """Deterministic uniform in (0, 1) for the given key."""
    i, j = key.words()
    w = _key_words(key.seed, key.tag, np.asarray([i]), np.asarray([j]))
    return float(_uniform_open(w)[0])


def laplace(key: NoiseKey, scale: float) -> float:
    """One mean-zero Laplace(scale) draw, deterministic in the key."""
    if scale <= 0:
        raise ValueError("laplace scale must be positive")
    u = uniform(key)
    return float(_inverse_cdf(np.asarray([u]), scale)[0])


def laplace_array(seed: int, tag: str, i: np.ndarray, j: np.ndarray,
                  scale) -> np.ndarray:
    """Vectorized key-derived Laplace draws; scale may be scalar or array.

    A zero scale yields an exact zero draw (zero-noise testing mode);
    negative scales are rejected.
    """
    scale = np.asarray(scale, dtype=np.float64)
    if np.any(scale < 0):
        raise ValueError("laplace scale must be nonnegative")
    i = np.asarray(i, dtype=np.int64)
    j = np.asarray(j, dtype=np.int64)
    u = _uniform_open(_key_words(seed, tag, i, j))
    out = _inverse_cdf(u, np.broadcast_to(scale, u.shape))
    return np.where(np.broadcast_to(scale, u.shape) == 0.0, 0.0, out)


def _inverse_cdf(u: np.ndarray, scale) -> np.ndarray:
    lower = u < 0.5
    out = np.empty_like(u)
    out[lower] = np.log(2.0 * u[lower])
    out[~lower] = -np.log(2.0 * (1.0 - u[~lower]))
    return out * scale


def uniform_array(seed: int, tag: str, i, j) -> np.ndarray:
    """Vectorized key-derived uniforms in (0, 1)."""
    i = np.asarray(i, dtype=np.int64)
    j = np.asarray(j, dtype=np.int64)
    return _uniform_open(_key_words(seed, tag, i, j))


def agreement_scale(d_u: int, d_v: int, params) -> float:
    """Laplace parameter for the pairwise agreement noise.

    max(1, gamma * sqrt(max(5, d(u), d(v)) * ln(1/delta_agr)) / epsilon_agr),
    times the testing noise multiplier.
    """
    if d_u < 1 or d_v < 1:
        raise ValueError("closed degrees are at least 1")
    base = max(
        1.0,
        params.gamma
        * np.sqrt(max(5, d_u, d_v) * np.log(1.0 / params.delta_agr))
        / params.epsilon_agr,
    )
    return base * params.noise_multiplier


def agreement_scales(d_u: np.ndarray, d_v: np.ndarray, params) -> np.ndarray:
    """Vectorized agreement_scale over parallel degree arrays."""
    md = np.maximum(np.maximum(d_u, d_v), 5)
    base = np.maximum(
        1.0,
        params.gamma * np.sqrt(md * np.log(1.0 / params.delta_agr))
        / params.epsilon_agr,
    )
    return base * params.noise_multiplier


@dataclass
class NoiseLedger:
    """Record of every draw of one run, keyed the same way it was derived.

    Each entry stores (scale, draw); re-derivation from the key must
    reproduce the draw exactly.
    """
    seed: int
    degree: dict = field(default_factory=dict)      # vertex -> (scale, draw)
    light: dict = field(default_factory=dict)       # vertex -> (scale, draw)
    agreement: dict = field(default_factory=dict)   # (u, v) -> (scale, draw)

    _STORES = {TAG_DEGREE: "degree", TAG_LIGHT: "light",
               TAG_AGREEMENT: "agreement"}

    def draw(self, tag: str, index, scale: float) -> float:
        store = getattr(self, self._STORES[tag])
        key = NoiseKey(self.seed, tag, index)
        canon = key.words() if isinstance(index, tuple) else index
        if canon in store:
            return store[canon][1]
        value = 0.0 if scale == 0.0 else laplace(key, scale)
        store[canon] = (scale, value)
        return value

    def record_array(self, tag: str, i, j, scale, draws) -> None:
        store = getattr(self, self._STORES[tag])
        scale = np.broadcast_to(np.asarray(scale, dtype=np.float64),
                                np.shape(draws))
        if tag == TAG_AGREEMENT:
            for a, b, s, d in zip(np.asarray(i), np.asarray(j), scale, draws):
                store[(min(int(a), int(b)), max(int(a), int(b)))] = \
                    (float(s), float(d))
        else:
            for a, s, d in zip(np.asarray(i), scale, draws):
                store[int(a)] = (float(s), float(d))

    def dump_csv(self, stream) -> None:
        writer = csv.writer(stream)
        writer.writerow(["tag", "index", "scale", "draw"])
        for tag in (TAG_DEGREE, TAG_LIGHT, TAG_AGREEMENT):
            store = getattr(self, self._STORES[tag])
            for index in sorted(store):
                scale, value = store[index]
                label = (f"{index[0]}-{index[1]}" if isinstance(index, tuple)
                         else str(index))
                writer.writerow([tag, label, repr(float(scale)),
                                 repr(float(value))])
