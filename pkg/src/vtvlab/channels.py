"""Channel identities and ordering conventions.

Two orderings coexist: the in-memory matrix order used by the model and the
kinematics code (source channels as APER, PER, F0), and the column order used
by the CSV formats and the evaluation report (PER before APER). Conversions
between them always go through the channel-name lists below, never through
positional assumptions.
"""

ORAL_CHANNELS = ("LA", "LP", "TTCL", "TTCD", "TBCL", "TBCD")
SOURCE_CHANNELS = ("APER", "PER", "F0")

# In-memory layout of the 9-channel tract-variable matrix.
CHANNELS = ORAL_CHANNELS + SOURCE_CHANNELS

# Column layout of tract-variable CSV files and the evaluation report.
CSV_CHANNELS = ORAL_CHANNELS + ("PER", "APER", "F0")

# Articulatory-orientation flip. Constriction-degree channels are raw
# distances (larger = more open); negating them makes larger = more
# constricted. Location channels are x offsets from the incisor origin and
# are already anterior-positive, so they pass through unchanged.
ORIENTATION_FLIP = {
    "LA": 1.0,
    "LP": 1.0,
    "TTCL": 1.0,
    "TTCD": -1.0,
    "TBCL": 1.0,
    "TBCD": -1.0,
}

TARGET_RATE_HZ = 100.0
EMBEDDING_RATE_HZ = 50.0
EMBEDDING_LAYERS = 25
