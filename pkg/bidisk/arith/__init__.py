from .barnes import barnes_g_int
from .harmonic import HarmonicCache, bernoulli_even, harmonic, harmonic2
from .intervals import RationalInterval
from .pi2 import pi2_enclosure, pi2_enclosure_digits
from .piquadratic import PiQuadratic, Sign, qpi2_sign

__all__ = [
    "HarmonicCache",
    "PiQuadratic",
    "RationalInterval",
    "Sign",
    "barnes_g_int",
    "bernoulli_even",
    "harmonic",
    "harmonic2",
    "pi2_enclosure",
    "pi2_enclosure_digits",
    "qpi2_sign",
]
