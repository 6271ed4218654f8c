"""Pellet geometry to tract variables.

Coordinates are midsagittal millimetres with the incisor origin at (0, 0);
x increases toward the front of the mouth, so the palate trace runs from
x near 0 (incisors) to negative x (pharynx). Constriction degrees are raw
point/arc-to-trace distances; constriction locations are x offsets of the
minimizing point from the origin.
"""

from dataclasses import dataclass, replace
import math

import numpy as np

from . import geometry
from .channels import ORAL_CHANNELS, ORIENTATION_FLIP
from .errors import (
    EmptyInputError,
    InvalidFrameError,
    InvalidTraceError,
    OrientationError,
)

PELLET_NAMES = ("UL", "LL", "T1", "T2", "T3", "T4")


@dataclass(frozen=True)
class PelletFrame:
    """One articulography frame: six pellet positions in mm plus time."""

    time: float
    UL: tuple
    LL: tuple
    T1: tuple
    T2: tuple
    T3: tuple
    T4: tuple

    def pellet(self, name):
        return getattr(self, name)

    def validate(self):
        for name in PELLET_NAMES:
            x, y = self.pellet(name)
            if not (math.isfinite(x) and math.isfinite(y)):
                raise InvalidFrameError(f"pellet {name} has non-finite coordinates")
        if not math.isfinite(self.time):
            raise InvalidFrameError("non-finite frame time")


@dataclass(frozen=True)
class PalateTrace:
    """Ordered polyline tracing maxilla, velum, and anterior pharyngeal wall."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
            raise InvalidTraceError("trace needs at least two 2-D points")
        if not np.isfinite(pts).all():
            raise InvalidTraceError("trace contains non-finite points")
        if (np.diff(pts, axis=0) == 0.0).all(axis=1).any():
            raise InvalidTraceError("trace repeats consecutive points")
        object.__setattr__(self, "points", pts)


@dataclass(frozen=True)
class TractVariableFrame:
    """Six oral tract variables for one frame, tagged with their orientation."""

    LA: float
    LP: float
    TTCL: float
    TTCD: float
    TBCL: float
    TBCD: float
    orientation: str = "raw"

    def channel(self, name):
        return getattr(self, name)


@dataclass(frozen=True)
class SpeakerRange:
    """Per-channel (min, max) pairs fitted over one speaker's data."""

    channels: tuple
    low: np.ndarray
    high: np.ndarray

    def bounds(self, channel):
        i = self.channels.index(channel)
        return float(self.low[i]), float(self.high[i])


def lip_aperture(frame):
    """Euclidean distance between the upper- and lower-lip pellets."""
    frame.validate()
    ux, uy = frame.UL
    lx, ly = frame.LL
    return math.hypot(ux - lx, uy - ly)


def lip_protrusion(frame):
    """Horizontal offset of the lower lip from the incisor origin."""
    frame.validate()
    return float(frame.LL[0])


def tongue_tip_tvs(frame, trace):
    """(TTCD, TTCL): distance of T1 to the trace and its x offset."""
    frame.validate()
    tip = np.asarray(frame.T1, dtype=np.float64)
    d = geometry.min_dist_to_polyline(tip[None, :], trace.points)
    return float(d[0]), float(tip[0])


def _argmin_anterior(dists, xs):
    """Index of the minimum distance; exact ties go to the largest x."""
    dmin = dists.min()
    tied = np.flatnonzero(dists == dmin)
    return tied[np.argmax(xs[tied])]


def _refine_on_arc(arc_info, theta_lo, theta_hi, trace_points, d_best):
    """Golden-section polish of the arc parameter around the best sample.

    Only adopted when it strictly improves on the sampled minimum, which
    keeps the anterior tie-break stable on flat distance profiles.
    """
    center, radius, _, _ = arc_info
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0

    def dist_at(theta):
        p = np.array([[center[0] + radius * math.cos(theta), center[1] + radius * math.sin(theta)]])
        return float(geometry.min_dist_to_polyline(p, trace_points)[0])

    a, b = theta_lo, theta_hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = dist_at(c), dist_at(d)
    for _ in range(48):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = dist_at(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = dist_at(d)
    theta = c if fc < fd else d
    f = min(fc, fd)
    if f < d_best:
        return f, center[0] + radius * math.cos(theta)
    return None


def tongue_body_tvs(frame, trace):
    """(TBCD, TBCL): minimum arc-to-trace distance and the arc x at the minimum.

    The tongue-body curve is the circumcircle arc through T2, T3, T4 sampled
    at 512 points (collinear pellets degrade to the two-segment polyline); a
    local golden-section refinement tightens the minimum when the curve is a
    true arc.
    """
    frame.validate()
    samples, arc_info = geometry.sample_tongue_body_curve(
        frame.T2, frame.T3, frame.T4, geometry.ARC_SAMPLES
    )
    dists = geometry.min_dist_to_polyline(samples, trace.points)
    i = _argmin_anterior(dists, samples[:, 0])
    tbcd = float(dists[i])
    tbcl = float(samples[i, 0])
    if arc_info is not None:
        center, radius, start, sweep = arc_info
        step = sweep / (geometry.ARC_SAMPLES - 1)
        theta_i = start + step * i
        lo, hi = sorted((theta_i - step, theta_i + step))
        refined = _refine_on_arc(arc_info, lo, hi, trace.points, tbcd)
        if refined is not None:
            tbcd, tbcl = refined
    return tbcd, tbcl


def compute_frame(frame, trace):
    """All six oral tract variables for one frame, raw orientation."""
    ttcd, ttcl = tongue_tip_tvs(frame, trace)
    tbcd, tbcl = tongue_body_tvs(frame, trace)
    return TractVariableFrame(
        LA=lip_aperture(frame),
        LP=lip_protrusion(frame),
        TTCL=ttcl,
        TTCD=ttcd,
        TBCL=tbcl,
        TBCD=tbcd,
        orientation="raw",
    )


def compute_matrix(frames, trace):
    """(times, values) for a frame sequence; values is (6, T) in channel order."""
    if not frames:
        raise EmptyInputError("no frames")
    times = np.array([f.time for f in frames], dtype=np.float64)
    values = np.empty((len(ORAL_CHANNELS), len(frames)), dtype=np.float64)
    for t, frame in enumerate(frames):
        tv = compute_frame(frame, trace)
        for c, name in enumerate(ORAL_CHANNELS):
            values[c, t] = tv.channel(name)
    return times, values


def orient_articulatory(frame):
    """Flip raw channels into the articulatory sign convention.

    Degree channels are negated so that larger means more constricted;
    location and lip channels pass through. Raises when the frame is
    already articulatory.
    """
    if frame.orientation != "raw":
        raise OrientationError("frame already in articulatory orientation")
    kwargs = {name: frame.channel(name) * ORIENTATION_FLIP[name] for name in ORAL_CHANNELS}
    return TractVariableFrame(orientation="articulatory", **kwargs)


def orient_raw(frame):
    """Exact inverse of orient_articulatory."""
    if frame.orientation != "articulatory":
        raise OrientationError("frame already in raw orientation")
    kwargs = {name: frame.channel(name) * ORIENTATION_FLIP[name] for name in ORAL_CHANNELS}
    return TractVariableFrame(orientation="raw", **kwargs)


def orient_matrix(values, channels=ORAL_CHANNELS):
    """Apply the articulatory flip to a (C, T) matrix, returning a copy."""
    out = np.array(values, dtype=np.float64, copy=True)
    for c, name in enumerate(channels):
        out[c] *= ORIENTATION_FLIP.get(name, 1.0)
    return out


def fit_speaker_range(series):
    """SpeakerRange over per-channel value sequences (mapping name -> values)."""
    channels = tuple(series.keys())
    lows = []
    highs = []
    for name in channels:
        vals = np.asarray(series[name], dtype=np.float64)
        if vals.size == 0:
            raise EmptyInputError(f"channel {name} has no values")
        if not np.isfinite(vals).all():
            raise InvalidFrameError(f"channel {name} has non-finite values")
        lows.append(vals.min())
        highs.append(vals.max())
    return SpeakerRange(channels=channels, low=np.array(lows), high=np.array(highs))


def merge_speaker_ranges(a, b):
    if a.channels != b.channels:
        raise ShapeMismatchError("ranges cover different channels")
    return SpeakerRange(
        channels=a.channels,
        low=np.minimum(a.low, b.low),
        high=np.maximum(a.high, b.high),
    )


def normalize(value, low, high):
    """Min-max scale a value so [low, high] maps onto [-1, 1].

    A degenerate range (high == low) maps everything to 0; values beyond the
    range pass through the same affine map without clamping.
    """
    if high < low:
        raise ValueError("range high < low")
    if high == low:
        return 0.0
    return 2.0 * (value - low) / (high - low) - 1.0


def denormalize(value, low, high):
    """Algebraic inverse of normalize for high > low."""
    if high < low:
        raise ValueError("range high < low")
    if high == low:
        return low
    return low + (value + 1.0) * (high - low) / 2.0


def normalize_matrix(values, speaker_range, channels=ORAL_CHANNELS):
    """Channel-wise normalize of a (C, T) matrix against a SpeakerRange."""
    out = np.empty_like(np.asarray(values, dtype=np.float64))
    for c, name in enumerate(channels):
        low, high = speaker_range.bounds(name)
        if high == low:
            out[c] = 0.0
        else:
            out[c] = 2.0 * (values[c] - low) / (high - low) - 1.0
    return out


from .errors import ShapeMismatchError  # noqa: E402  (merge_speaker_ranges)
