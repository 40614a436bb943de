"""Shared fixtures and the pinned optimal 10-word cycle for n=5, w=2."""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

# The known optimal cyclic weight-2 code on five cells, with the
# transition indices that step through it.  Frozen here as an independent
# check value: the builder must reproduce it bit for bit.
OPTIMAL_N5_W2_WORDS = (
    "11000",
    "10100",
    "01100",
    "01010",
    "00110",
    "00101",
    "00011",
    "10010",
    "10001",
    "01001",
)
OPTIMAL_N5_W2_TRANSITIONS = (1, 0, 2, 1, 3, 2, 4, 3, 0, 4)
