"""Monte Carlo estimation of per-user and eavesdropper SINRs and the
ergodic secrecy sum-rate.

Three simulation modes:

FULL     draws channels, per-user random codebooks and ZF beams explicitly;
         the physical ground truth.
QCA      replaces the residual-interference geometry with its
         quantization-cell-approximation law (numerator Exp(1), denominator
         Gamma(n_t-1, distortion) plus noise); the eavesdropper side uses
         the same law with distortion 1.  Much faster, and exactly the
         model the closed forms integrate.
PERFECT  beams built from the true channel directions: zero inter-user
         interference, a degenerate sanity check.

Trials are partitioned into fixed-size chunks, each driven by its own
counter-based substream keyed by (seed, chunk index), and chunk results are
reduced in index order — so the worker count can never change a result bit.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import (DegenerateInputError, RngStream, as_generator,
                     complex_gaussian_batch)
from .params import SystemParams
from .codebooks import (MAX_CODEBOOK_BITS, Codebook, CodebookSizeError,
                       generate_codebook, quantize, zfbf_beams)

# Beam construction below this smallest-QR-diagonal counts as a degenerate
# draw (coincident quantized directions) and is resampled.
_BEAM_RANK_TOL = 1e-8

# Fixed chunking so worker count cannot influence the sample sequence.
_CHUNK_TRIALS = 8192
_CHUNK_TARGET_BYTES = 48 * 2 ** 20

# Reserved stream id for the shared codebooks of the fixed-codebook mode.
_FIXED_CODEBOOK_STREAM = 2 ** 62


class SimMode(Enum):
    FULL = "full"
    QCA = "qca"
    PERFECT = "perfect"


@dataclass(frozen=True)
class SinrRealization:
    """Per-user SINRs for one channel draw, both links."""

    legitimate: np.ndarray   # shape (n_t,), served users
    eavesdropper: np.ndarray  # shape (n_t,), eavesdropper tapping each stream


@dataclass(frozen=True)
class RateEstimate:
    """Monte Carlo mean of an ergodic rate with its standard error."""

    mean: float
    std_err: float
    n_trials: int
    rejected: int


def chunk_trials(params: SystemParams, mode: SimMode) -> int:
    """Chunk size used for a given configuration (deterministic in params)."""
    if mode is not SimMode.FULL:
        return _CHUNK_TRIALS
    per_trial = 16 * params.n_t ** 2 * 2 ** params.bits  # codebook bytes dominate
    return max(1, min(_CHUNK_TRIALS, _CHUNK_TARGET_BYTES // per_trial))


def _zf_beams_batch(directions: np.ndarray):
    """Vectorized zero-forcing beams for a batch of direction sets.

    ``directions`` has shape (n, K, K), rows = unit directions.  For each
    trial and user, the beam is the orthonormal complement of the other
    K-1 directions, obtained from the trailing column of a complete
    Householder QR.  Returns (beams (n, K, K), ok (n,) validity mask).
    """
    n, k, dim = directions.shape
    others = np.empty((n, k, k - 1, dim), dtype=complex)
    for i in range(k):
        others[:, i] = directions[:, [j for j in range(k) if j != i], :]
    # Column-matrix form per (trial, user): (n, K, dim, K-1).
    mats = np.swapaxes(others, -1, -2)
    q, r = np.linalg.qr(mats, mode="complete")
    beams = q[..., -1]  # (n, K, dim)
    diag = np.abs(np.diagonal(r, axis1=-2, axis2=-1))  # (n, K, K-1)
    ok = diag.min(axis=(1, 2)) > _BEAM_RANK_TOL
    return beams, ok


def _full_sinr_batch(params: SystemParams, gen: np.random.Generator, n: int,
                     perfect: bool = False, fixed_codewords=None):
    """n FULL- or PERFECT-mode SINR draws, resampling degenerate beam sets.

    Returns (legitimate (n, K), eavesdropper (n, K), rejected count,
    max zero-forcing residual over kept draws).
    """
    k = params.n_t
    if not perfect and fixed_codewords is None and params.bits > MAX_CODEBOOK_BITS:
        raise CodebookSizeError(
            f"bits={params.bits} exceeds the exhaustive-search cap of "
            f"{MAX_CODEBOOK_BITS}; use QCA mode")
    noise_legit = params.noise_over_power
    noise_eav = params.eav_noise_over_power

    legit_parts, eav_parts = [], []
    rejected = 0
    zf_residual = 0.0
    remaining = n
    while remaining > 0:
        h = complex_gaussian_batch(gen, (remaining, k, k))      # rows: user channels
        g = complex_gaussian_batch(gen, (remaining, k))         # eavesdropper fading
        h_dir = h / np.linalg.norm(h, axis=2, keepdims=True)
        if perfect:
            point_dirs = h_dir
        elif fixed_codewords is not None:
            cw = np.broadcast_to(fixed_codewords,
                                 (remaining,) + fixed_codewords.shape)
            point_dirs = _select_codewords(h_dir, cw)
        else:
            cw = complex_gaussian_batch(gen, (remaining, k, 2 ** params.bits, k))
            cw = cw / np.linalg.norm(cw, axis=3, keepdims=True)
            point_dirs = _select_codewords(h_dir, cw)

        beams, ok = _zf_beams_batch(point_dirs)
        n_bad = int(np.count_nonzero(~ok))
        if n_bad:
            rejected += n_bad
            h, g, beams, point_dirs = (arr[ok] for arr in (h, g, beams, point_dirs))

        # cross[t, k, i] = h_k^H w_i;  eav[t, i] = g^H w_i
        cross = np.einsum("tkn,tin->tki", np.conj(h), beams)
        power = np.abs(cross) ** 2
        signal = np.einsum("tkk->tk", power).copy()
        interference = power.sum(axis=2) - signal
        if perfect:
            legit = signal / noise_legit
        else:
            legit = signal / (interference + noise_legit)
            zf = np.abs(np.einsum("tkn,tin->tki", np.conj(point_dirs), beams))
            zf[:, np.arange(k), np.arange(k)] = 0.0
            if zf.size:
                zf_residual = max(zf_residual, float(zf.max()))

        eav_amps = np.abs(np.einsum("tn,tin->ti", np.conj(g), beams)) ** 2
        eav = eav_amps / (eav_amps.sum(axis=1, keepdims=True) - eav_amps + noise_eav)

        legit_parts.append(legit)
        eav_parts.append(eav)
        remaining -= legit.shape[0]

    return (np.concatenate(legit_parts), np.concatenate(eav_parts),
            rejected, zf_residual)


def _select_codewords(h_dir: np.ndarray, codewords: np.ndarray) -> np.ndarray:
    """Best codeword per (trial, user) by squared direction correlation."""
    ips = np.einsum("tkn,tkbn->tkb", np.conj(h_dir), codewords)
    idx = np.argmax(np.abs(ips) ** 2, axis=2)
    return np.take_along_axis(codewords, idx[:, :, None, None],
                              axis=2)[:, :, 0, :]


def _qca_sinr_batch(params: SystemParams, gen: np.random.Generator, n: int):
    """n QCA-mode SINR draws (synthetic interference, no beam geometry)."""
    k = params.n_t
    legit_num = gen.exponential(size=(n, k))
    legit_den = gen.gamma(shape=k - 1, scale=params.distortion, size=(n, k))
    eav_num = gen.exponential(size=(n, k))
    eav_den = gen.gamma(shape=k - 1, scale=1.0, size=(n, k))
    legit = legit_num / (legit_den + params.noise_over_power)
    eav = eav_num / (eav_den + params.eav_noise_over_power)
    return legit, eav, 0, 0.0


def _sinr_batch(params: SystemParams, mode: SimMode, gen, n: int,
                fixed_codewords=None):
    if mode is SimMode.QCA:
        return _qca_sinr_batch(params, gen, n)
    if mode is SimMode.FULL:
        return _full_sinr_batch(params, gen, n, fixed_codewords=fixed_codewords)
    if mode is SimMode.PERFECT:
        return _full_sinr_batch(params, gen, n, perfect=True)
    raise ValueError(f"unknown mode {mode!r}")


def simulate_realization(params: SystemParams, mode: SimMode,
                         rng) -> SinrRealization:
    """One SINR draw through the reference (non-batched) construction.

    FULL mode runs the explicit pipeline — channels, per-user codebooks,
    codeword selection, ZF beams via the orthonormal-complement builder —
    and resamples on degenerate beam sets.  QCA and PERFECT as in the
    module docstring.  With an :class:`RngStream` argument the result is a
    pure function of the stream.
    """
    gen = as_generator(rng)
    k = params.n_t
    if mode is SimMode.QCA:
        legit, eav, _, _ = _qca_sinr_batch(params, gen, 1)
        return SinrRealization(legitimate=legit[0], eavesdropper=eav[0])
    if mode is SimMode.PERFECT:
        legit, eav, _, _ = _full_sinr_batch(params, gen, 1, perfect=True)
        return SinrRealization(legitimate=legit[0], eavesdropper=eav[0])

    while True:
        # Same draw layout as the batched kernel with n = 1, so both paths
        # fed one stream produce identical channels and codebooks.
        h = complex_gaussian_batch(gen, (1, k, k))[0]
        g = complex_gaussian_batch(gen, (1, k))[0]
        cw = complex_gaussian_batch(gen, (1, k, 2 ** params.bits, k))[0]
        cw = cw / np.linalg.norm(cw, axis=2, keepdims=True)
        outcomes = [quantize(h[i], Codebook(codewords=cw[i], bits=params.bits))
                    for i in range(k)]
        try:
            beams = zfbf_beams([o.codeword for o in outcomes])
        except DegenerateInputError:
            continue
        cross = np.abs(np.conj(h) @ beams.T) ** 2  # [k, i] = |h_k^H w_i|^2
        signal = np.diag(cross)
        interference = cross.sum(axis=1) - signal
        legit = signal / (interference + params.noise_over_power)
        eav_amps = np.abs(beams @ np.conj(g)) ** 2
        eav = eav_amps / (eav_amps.sum() - eav_amps + params.eav_noise_over_power)
        return SinrRealization(legitimate=legit, eavesdropper=eav)


def _map_chunks(worker_fn, n_chunks: int, workers: int):
    if workers <= 1 or n_chunks <= 1:
        return [worker_fn(i) for i in range(n_chunks)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker_fn, range(n_chunks)))


def _fixed_codewords(params: SystemParams, seed: int):
    """Shared per-user codebooks for the fixed-codebook study mode."""
    gen = RngStream(seed, _FIXED_CODEBOOK_STREAM).generator()
    books = [generate_codebook(params.n_t, params.bits, gen)
             for _ in range(params.n_t)]
    return np.stack([b.codewords for b in books])  # (K, 2**bits, K)


def estimate_secrecy_rate(params: SystemParams, mode: SimMode, n_trials: int,
                          seed: int, workers: int = 1, clip: bool = False,
                          fixed_codebooks: bool = False) -> RateEstimate:
    """Monte Carlo ergodic secrecy sum-rate over ``n_trials`` channel draws.

    Each trial contributes sum_k [log2(1+sinr_k) - log2(1+eav_sinr_k)];
    negative per-user terms are kept unless ``clip`` applies a per-user
    positive part.  For a fixed seed the result is bit-identical across
    worker counts.  ``fixed_codebooks`` freezes one codebook set for all
    trials instead of redrawing per realization.
    """
    if n_trials < 1:
        raise ValueError(f"n_trials must be >= 1, got {n_trials}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    fixed = (_fixed_codewords(params, seed)
             if fixed_codebooks and mode is SimMode.FULL else None)
    chunk = chunk_trials(params, mode)
    n_chunks = (n_trials + chunk - 1) // chunk

    def run_chunk(index: int):
        gen = RngStream(seed, index).generator()
        m = min(chunk, n_trials - index * chunk)
        legit, eav, rejected, _ = _sinr_batch(params, mode, gen, m, fixed)
        per_user = np.log2(1.0 + legit) - np.log2(1.0 + eav)
        if clip:
            per_user = np.maximum(per_user, 0.0)
        per_trial = per_user.sum(axis=1)
        return (float(per_trial.sum()), float(per_trial @ per_trial),
                m, rejected)

    total = total_sq = 0.0
    rejected = 0
    for s, sq, _, rej in _map_chunks(run_chunk, n_chunks, workers):
        total += s
        total_sq += sq
        rejected += rej
    mean = total / n_trials
    if n_trials > 1:
        var = max(total_sq - n_trials * mean * mean, 0.0) / (n_trials - 1)
        std_err = math.sqrt(var / n_trials)
    else:
        std_err = 0.0
    return RateEstimate(mean=mean, std_err=std_err, n_trials=n_trials,
                        rejected=rejected)


def collect_sinr_samples(params: SystemParams, mode: SimMode, link: str,
                         n: int, seed: int, workers: int = 1) -> np.ndarray:
    """n i.i.d. samples of the first user's (or eavesdropper's) SINR.

    ``link`` is "legitimate" or "eavesdropper".  Chunked exactly like
    :func:`estimate_secrecy_rate`, so results are reproducible and
    worker-count independent.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if link not in ("legitimate", "eavesdropper"):
        raise ValueError(f"link must be 'legitimate' or 'eavesdropper', got {link!r}")
    chunk = chunk_trials(params, mode)
    n_chunks = (n + chunk - 1) // chunk

    def run_chunk(index: int):
        gen = RngStream(seed, index).generator()
        m = min(chunk, n - index * chunk)
        legit, eav, _, _ = _sinr_batch(params, mode, gen, m)
        return legit[:, 0] if link == "legitimate" else eav[:, 0]

    return np.concatenate(_map_chunks(run_chunk, n_chunks, workers))


def max_zf_residual(params: SystemParams, n: int, seed: int) -> tuple:
    """(max zero-forcing residual, rejected count) over n FULL-mode draws."""
    chunk = chunk_trials(params, SimMode.FULL)
    worst = 0.0
    rejected = 0
    done = 0
    index = 0
    while done < n:
        gen = RngStream(seed, index).generator()
        m = min(chunk, n - done)
        _, _, rej, resid = _full_sinr_batch(params, gen, m)
        worst = max(worst, resid)
        rejected += rej
        done += m
        index += 1
    return worst, rejected


def ks_statistic(samples, cdf) -> float:
    """Kolmogorov-Smirnov sup distance between the empirical CDF and ``cdf``.

    ``cdf`` is a scalar callable, monotone on the sample range.
    """
    x = np.sort(np.asarray(samples, dtype=float))
    n = x.shape[0]
    if n == 0:
        raise ValueError("samples must be non-empty")
    f = np.array([cdf(v) for v in x], dtype=float)
    steps = np.arange(1, n + 1) / n
    return float(max((steps - f).max(), (f - (steps - 1.0 / n)).max()))
